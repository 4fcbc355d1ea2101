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

#include "prequant/quantum_register.hpp"

#include <bit>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prequant/errors.hpp"
#include "prequant/rng.hpp"

namespace prequant {

namespace {

void check_register_bits(int n, const char* what) {
    if (n < 1 || n > kMaxRegisterBits) {
        throw std::invalid_argument(std::string(what) + " must be between 1 and " +
                                    std::to_string(kMaxRegisterBits) + ", got " +
                                    std::to_string(n));
    }
}

void check_unitary(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("unitary must be square");
    }
    ComplexMatrix gram = u.adjoint() * u;
    gram.diagonal().array() -= 1.0;
    if (gram.norm() > kHermitianTol) {
        throw std::invalid_argument("matrix is not unitary within tolerance");
    }
}

/// Kronecker product, row-major bit convention: (a kron b)(i,j) with
/// i = i_a * rows(b) + i_b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 1) {
        throw std::invalid_argument("state vector must be nonempty");
    }
    double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kHermitianTol) {
        throw std::invalid_argument("state vector norm is " + std::to_string(norm) +
                                    ", expected 1");
    }
}

BooleanFunction::BooleanFunction(int input_bits, int output_bits,
                                 std::vector<std::uint32_t> table)
    : input_bits_(input_bits), output_bits_(output_bits), table_(std::move(table)) {
    check_register_bits(input_bits_, "input bit count");
    check_register_bits(output_bits_, "output bit count");
    if (input_bits_ + output_bits_ > kMaxRegisterBits) {
        throw std::invalid_argument("register needs " +
                                    std::to_string(input_bits_ + output_bits_) +
                                    " bits, limit is " + std::to_string(kMaxRegisterBits));
    }
    std::size_t expected = std::size_t{1} << input_bits_;
    if (table_.size() != expected) {
        throw std::invalid_argument("truth table has " + std::to_string(table_.size()) +
                                    " entries, expected " + std::to_string(expected));
    }
    std::uint32_t limit = std::uint32_t{1} << output_bits_;
    for (std::uint32_t v : table_) {
        if (v >= limit) {
            throw std::invalid_argument("truth table value " + std::to_string(v) +
                                        " out of range for " + std::to_string(output_bits_) +
                                        " output bits");
        }
    }
}

bool BooleanFunction::is_constant() const {
    for (std::uint32_t v : table_) {
        if (v != table_.front()) return false;
    }
    return true;
}

bool BooleanFunction::is_balanced() const {
    if (output_bits_ != 1) return false;
    std::size_t ones = 0;
    for (std::uint32_t v : table_) ones += v;
    return 2 * ones == table_.size();
}

OracleUnitary::OracleUnitary(std::vector<std::size_t> permutation)
    : permutation_(std::move(permutation)) {
    std::size_t n = permutation_.size();
    if (n == 0) {
        throw std::invalid_argument("permutation must be nonempty");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t target : permutation_) {
        if (target >= n || seen[target]) {
            throw std::invalid_argument("not a valid permutation");
        }
        seen[target] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (permutation_[permutation_[i]] != i) {
            throw std::invalid_argument("oracle permutation must be self-inverse");
        }
    }
}

ComplexMatrix OracleUnitary::matrix() const {
    auto n = static_cast<Eigen::Index>(permutation_.size());
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(static_cast<Eigen::Index>(permutation_[static_cast<std::size_t>(i)]), i) = 1.0;
    }
    return m;
}

std::size_t basis_index(std::uint32_t x, std::uint32_t y, int output_bits) {
    return (static_cast<std::size_t>(x) << output_bits) | y;
}

PureState uniform_superposition(int n) {
    check_register_bits(n, "register size");
    auto dim = Eigen::Index{1} << n;
    double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    return PureState(ComplexVector::Constant(dim, Complex(amp, 0.0)));
}

ComplexMatrix hadamard_transform(int n) {
    check_register_bits(n, "register size");
    auto dim = Eigen::Index{1} << n;
    double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    ComplexMatrix h(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            auto bits = static_cast<std::uint64_t>(i) & static_cast<std::uint64_t>(j);
            double sign = (std::popcount(bits) & 1) ? -1.0 : 1.0;
            h(i, j) = Complex(sign * scale, 0.0);
        }
    }
    return h;
}

OracleUnitary oracle_unitary(const BooleanFunction& f) {
    std::size_t inputs = std::size_t{1} << f.input_bits();
    std::size_t outputs = std::size_t{1} << f.output_bits();
    std::vector<std::size_t> perm(inputs * outputs);
    for (std::uint32_t x = 0; x < inputs; ++x) {
        for (std::uint32_t y = 0; y < outputs; ++y) {
            perm[basis_index(x, y, f.output_bits())] =
                basis_index(x, y ^ f(x), f.output_bits());
        }
    }
    return OracleUnitary(std::move(perm));
}

PureState apply_oracle(const OracleUnitary& oracle, const PureState& state) {
    if (static_cast<std::size_t>(state.dim()) != oracle.dim()) {
        throw std::invalid_argument("oracle and state dimensions differ");
    }
    ComplexVector out(state.dim());
    const auto& perm = oracle.permutation();
    for (Eigen::Index i = 0; i < state.dim(); ++i) {
        out(static_cast<Eigen::Index>(perm[static_cast<std::size_t>(i)])) =
            state.amplitudes()(i);
    }
    return PureState(std::move(out));
}

PureState parallel_evaluation_state(const BooleanFunction& f) {
    PureState input = uniform_superposition(f.input_bits());
    auto out_dim = Eigen::Index{1} << f.output_bits();
    ComplexVector ancilla = ComplexVector::Zero(out_dim);
    ancilla(0) = 1.0;
    ComplexVector joint(input.dim() * out_dim);
    for (Eigen::Index i = 0; i < input.dim(); ++i) {
        joint.segment(i * out_dim, out_dim) = input.amplitudes()(i) * ancilla;
    }
    return apply_oracle(oracle_unitary(f), PureState(std::move(joint)));
}

GaussianFieldSpec pushforward_spec(const ComplexMatrix& u, const GaussianFieldSpec& spec) {
    check_unitary(u);
    if (u.rows() != spec.dim()) {
        throw std::invalid_argument("unitary and measure dimensions differ");
    }
    ComplexMatrix moved = u * spec.covariance() * u.adjoint();
    moved = 0.5 * (moved + moved.adjoint()).eval();
    return GaussianFieldSpec(std::move(moved), spec.kappa());
}

FieldEnsemble pushforward_samples(const ComplexMatrix& u, const FieldEnsemble& e) {
    check_unitary(u);
    if (u.rows() != e.dim()) {
        throw std::invalid_argument("unitary and ensemble dimensions differ");
    }
    ComplexMatrix moved = u * e.samples();
    return FieldEnsemble(std::move(moved), e.seed(), pushforward_spec(u, e.source_spec()));
}

RealVector born_probabilities(const DensityOperator& d) {
    return d.matrix().diagonal().real();
}

namespace {

DensityOperator empirical_density(const FieldEnsemble& e) {
    ComplexMatrix cov = empirical_covariance_c(e);
    cov = (0.5 / empirical_dispersion(e)) * (cov + cov.adjoint()).eval();
    return DensityOperator(std::move(cov));
}

std::size_t draw_outcome(const RealVector& probabilities, std::uint64_t seed) {
    RealVector p = probabilities.cwiseMax(0.0);
    double total = p.sum();
    if (!(total > 0.0)) {
        throw std::runtime_error("outcome distribution is entirely zero");
    }
    double u = GaussianStream(seed).next_uniform() * total;
    double cumulative = 0.0;
    for (Eigen::Index k = 0; k < p.size(); ++k) {
        cumulative += p(k);
        if (u <= cumulative) return static_cast<std::size_t>(k);
    }
    return static_cast<std::size_t>(p.size() - 1);
}

}  // namespace

std::size_t measure_and_consume(FieldEnsemble& e, std::uint64_t seed) {
    std::size_t outcome = draw_outcome(born_probabilities(empirical_density(e)), seed);
    e.consume();
    return outcome;
}

PureState deutsch_jozsa_statevector(const BooleanFunction& f) {
    int n = f.input_bits();
    auto dim = Eigen::Index{1} << (n + 1);
    ComplexVector start = ComplexVector::Zero(dim);
    start(basis_index(0, 1, 1)) = 1.0;
    ComplexVector state = hadamard_transform(n + 1) * start;
    state = oracle_unitary(f).matrix() * state;
    state = kron(hadamard_transform(n), ComplexMatrix::Identity(2, 2)) * state;
    return PureState(std::move(state));
}

DeutschJozsaResult deutsch_jozsa_demo(const BooleanFunction& f, double kappa,
                                      Eigen::Index samples, std::uint64_t seed,
                                      int threads) {
    if (f.output_bits() != 1) {
        throw std::invalid_argument("oracle must have one output bit");
    }
    if (!f.is_constant() && !f.is_balanced()) {
        throw std::invalid_argument("function is neither constant nor balanced");
    }
    int n = f.input_bits();
    auto dim = Eigen::Index{1} << (n + 1);
    ComplexVector start = ComplexVector::Zero(dim);
    start(basis_index(0, 1, 1)) = 1.0;

    FieldEnsemble e = sample_fields(pure_state_spec(start, kappa), samples, seed, threads);
    e = pushforward_samples(hadamard_transform(n + 1), e);
    e = pushforward_samples(oracle_unitary(f).matrix(), e);
    e = pushforward_samples(kron(hadamard_transform(n), ComplexMatrix::Identity(2, 2)), e);

    RealVector p = born_probabilities(empirical_density(e));
    e.consume();

    // Reading 0...0 on the input register leaves only the ancilla bit free.
    double p0 = p(basis_index(0, 0, 1)) + p(basis_index(0, 1, 1));
    Verdict verdict = p0 > 0.5 ? Verdict::kConstant : Verdict::kBalanced;
    return DeutschJozsaResult{verdict, p0};
}

}  // namespace prequant
