// Copyright 2026 The prequant developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prequant/variables.hpp"

#include <cmath>
#include <stdexcept>

#include "prequant/parallel.hpp"

namespace prequant {

namespace {

void require_hermitian_operator(const ComplexMatrix& a, Eigen::Index dim) {
    if (a.rows() != dim || a.cols() != dim) {
        throw std::invalid_argument("all operators of a variable must share one dimension");
    }
    if (!is_hermitian(a, kHermitianTol)) {
        throw std::invalid_argument("variable operators must be Hermitian");
    }
}

}  // namespace

PrequantumVariable::PrequantumVariable(ComplexMatrix quadratic,
                                       std::vector<QuarticTerm> quartic)
    : quadratic_(std::move(quadratic)), quartic_(std::move(quartic)) {
    if (quadratic_.rows() < 1 || quadratic_.rows() != quadratic_.cols()) {
        throw std::invalid_argument("quadratic operator must be square and nonempty");
    }
    require_hermitian_operator(quadratic_, quadratic_.rows());
    for (const auto& term : quartic_) {
        require_hermitian_operator(term.op, quadratic_.rows());
        if (!std::isfinite(term.coefficient)) {
            throw std::invalid_argument("quartic coefficients must be finite");
        }
    }
}

bool PrequantumVariable::has_quartic_part() const {
    for (const auto& term : quartic_) {
        if (term.coefficient != 0.0 && term.op.norm() > 0.0) {
            return true;
        }
    }
    return false;
}

PrequantumVariable PrequantumVariable::quadratic_part() const {
    return PrequantumVariable(quadratic_);
}

PrequantumVariable operator+(const PrequantumVariable& lhs, const PrequantumVariable& rhs) {
    if (lhs.dim() != rhs.dim()) {
        throw std::invalid_argument("cannot add variables of different dimension");
    }
    std::vector<QuarticTerm> quartic = lhs.quartic_;
    quartic.insert(quartic.end(), rhs.quartic_.begin(), rhs.quartic_.end());
    return PrequantumVariable(lhs.quadratic_ + rhs.quadratic_, std::move(quartic));
}

double evaluate(const PrequantumVariable& v, const ComplexVector& phi) {
    if (phi.size() != v.dim()) {
        throw std::invalid_argument("field dimension does not match the variable");
    }
    double value = hermitian_quadratic_form(v.quadratic(), phi);
    for (const auto& term : v.quartic_terms()) {
        const double q = hermitian_quadratic_form(term.op, phi);
        value += term.coefficient * q * q;
    }
    return value;
}

ComplexMatrix hessian_at_zero(const PrequantumVariable& v) {
    return v.quadratic();
}

namespace {

// f on the stacked real coordinates (q; p).
double evaluate_real(const PrequantumVariable& v, const RealVector& r) {
    const Eigen::Index n = v.dim();
    ComplexVector phi(n);
    phi.real() = r.head(n);
    phi.imag() = r.tail(n);
    return evaluate(v, phi);
}

// Half the central-difference Hessian of f at 0 on the 2n real coordinates.
RealMatrix half_real_hessian(const PrequantumVariable& v, double h) {
    const Eigen::Index m = 2 * v.dim();
    RealMatrix hess(m, m);
    RealVector r = RealVector::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        r[i] = h;
        const double f_plus = evaluate_real(v, r);
        r[i] = -h;
        const double f_minus = evaluate_real(v, r);
        r[i] = 0.0;
        hess(i, i) = (f_plus + f_minus) / (h * h);  // f(0) = 0
        for (Eigen::Index j = i + 1; j < m; ++j) {
            r[i] = h;
            r[j] = h;
            const double f_pp = evaluate_real(v, r);
            r[j] = -h;
            const double f_pm = evaluate_real(v, r);
            r[i] = -h;
            const double f_mm = evaluate_real(v, r);
            r[j] = h;
            const double f_mp = evaluate_real(v, r);
            r[i] = 0.0;
            r[j] = 0.0;
            hess(i, j) = (f_pp - f_pm - f_mp + f_mm) / (4.0 * h * h);
            hess(j, i) = hess(i, j);
        }
    }
    return 0.5 * hess;
}

}  // namespace

ComplexMatrix finite_difference_hessian(const PrequantumVariable& v, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    const RealMatrix coarse = half_real_hessian(v, step);
    const RealMatrix fine = half_real_hessian(v, step * 0.5);
    const double scale = std::max(coarse.norm(), fine.norm());
    const double drift = (coarse - fine).norm();
    if (drift > 0.1 * scale) {
        throw std::runtime_error(
            "finite-difference Hessian estimates at h and h/2 disagree by more "
            "than 10%; the step is unreliable for this variable");
    }
    // The truncation error bounds how far the estimate can sit from the
    // commuting class; widen the conversion tolerance accordingly.
    const double tol = kSymplecticTol + 4.0 * drift + 1e-12 * scale;
    return complex_operator_of(coarse, tol);
}

MonteCarloEstimate classical_average_mc(const PrequantumVariable& v,
                                        const FieldEnsemble& e, int threads) {
    const ComplexMatrix& s = e.samples();
    if (v.dim() != e.dim()) {
        throw std::invalid_argument("variable dimension does not match the ensemble");
    }
    const Eigen::Index count = e.sample_count();
    const auto blocks = static_cast<std::size_t>(block_count(count));
    std::vector<double> block_sum(blocks, 0.0);
    std::vector<double> block_sumsq(blocks, 0.0);
    for_each_block(count, threads, [&](std::int64_t block, std::int64_t begin, std::int64_t end) {
        KahanSum sum;
        KahanSum sumsq;
        for (std::int64_t k = begin; k < end; ++k) {
            const double x = evaluate(v, s.col(k));
            sum.add(x);
            sumsq.add(x * x);
        }
        block_sum[static_cast<std::size_t>(block)] = sum.sum;
        block_sumsq[static_cast<std::size_t>(block)] = sumsq.sum;
    });
    KahanSum total;
    KahanSum total_sq;
    for (std::size_t b = 0; b < blocks; ++b) {
        total.add(block_sum[b]);
        total_sq.add(block_sumsq[b]);
    }
    const double n = static_cast<double>(count);
    const double mean = total.sum / n;
    double standard_error = 0.0;
    if (count > 1) {
        const double variance = std::max(0.0, (total_sq.sum - n * mean * mean) / (n - 1.0));
        standard_error = std::sqrt(variance / n);
    }
    return {mean, standard_error};
}

double classical_average_exact(const PrequantumVariable& v, const GaussianFieldSpec& spec) {
    if (v.dim() != spec.dim()) {
        throw std::invalid_argument("variable dimension does not match the measure");
    }
    double value = wick_quadratic(spec, v.quadratic());
    for (const auto& term : v.quartic_terms()) {
        value += term.coefficient * wick_quartic(spec, term.op, term.op);
    }
    return value;
}

}  // namespace prequant
