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

#include "prequant/dequantize.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace prequant {

DensityOperator::DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
        throw std::invalid_argument("density operator must be a square matrix");
    }
    if (!matrix_.allFinite()) {
        throw std::invalid_argument("density operator entries must be finite");
    }
    if (!is_hermitian(matrix_, kHermitianTol)) {
        throw std::invalid_argument("density operator must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol) {
        throw std::invalid_argument("density operator must be positive semi-definite");
    }
    if (std::abs(matrix_.trace().real() - 1.0) > 1e-10) {
        throw std::invalid_argument("density operator must have unit trace");
    }
}

Observable::Observable(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
        throw std::invalid_argument("observable must be a square matrix");
    }
    if (!matrix_.allFinite()) {
        throw std::invalid_argument("observable entries must be finite");
    }
    if (!is_hermitian(matrix_, kHermitianTol)) {
        throw std::invalid_argument("observable must be Hermitian");
    }
}

DensityOperator to_density_operator(const GaussianFieldSpec& spec) {
    if (spec.kappa() == 0.0) {
        throw std::invalid_argument("cannot normalize a measure with zero dispersion");
    }
    return DensityOperator(spec.covariance() / spec.kappa());
}

Observable to_observable(const PrequantumVariable& v) {
    return Observable(hessian_at_zero(v));
}

double quantum_average(const DensityOperator& d, const Observable& a) {
    if (d.dim() != a.dim()) {
        throw std::invalid_argument("state and observable dimensions do not match");
    }
    return (d.matrix() * a.matrix()).trace().real();
}

double asymptotic_gap(const PrequantumVariable& v, const GaussianFieldSpec& spec) {
    const double classical = classical_average_exact(v, spec);
    const double quantum =
        spec.kappa() * quantum_average(to_density_operator(spec), to_observable(v));
    return std::abs(classical - quantum);
}

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("power-law fit needs at least two points");
    }
    const auto n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw std::domain_error("power-law fit needs strictly positive data");
        }
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) {
        throw std::domain_error("power-law fit needs at least two distinct abscissae");
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double fit = intercept + slope * lx[i];
        ss_res += (ly[i] - fit) * (ly[i] - fit);
        ss_tot += (ly[i] - my) * (ly[i] - my);
    }
    const double r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
    return {slope, intercept, r_squared};
}

PowerLawFit remainder_scaling_exponent(const PrequantumVariable& v,
                                       const DensityOperator& d,
                                       const std::vector<double>& kappa_grid) {
    if (!v.has_quartic_part()) {
        throw std::domain_error(
            "remainder identically zero: the variable is purely quadratic, so the "
            "first-order term is exact and there is no scaling exponent to fit");
    }
    if (kappa_grid.size() < 4) {
        throw std::invalid_argument("kappa grid needs at least 4 points");
    }
    double lo = kappa_grid.front(), hi = kappa_grid.front();
    for (double k : kappa_grid) {
        if (!(k > 0.0)) {
            throw std::invalid_argument("kappa grid values must be positive");
        }
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    if (hi < 100.0 * (1.0 - 1e-9) * lo) {
        throw std::invalid_argument("kappa grid must span at least two decades");
    }
    if (v.dim() != d.dim()) {
        throw std::invalid_argument("variable dimension does not match the state");
    }
    std::vector<double> gaps;
    gaps.reserve(kappa_grid.size());
    for (double kappa : kappa_grid) {
        GaussianFieldSpec spec(kappa * d.matrix(), kappa);
        const double gap = asymptotic_gap(v, spec);
        if (gap == 0.0) {
            throw std::domain_error(
                "gap vanished at a grid point; log-log fit is degenerate");
        }
        gaps.push_back(gap);
    }
    return fit_power_law(kappa_grid, gaps);
}

}  // namespace prequant
