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

#include "prequant/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "prequant/errors.hpp"
#include "prequant/parallel.hpp"
#include "prequant/rng.hpp"

namespace prequant {

namespace {

void validate_spec(const ComplexMatrix& covariance, double kappa) {
    if (covariance.rows() != covariance.cols() || covariance.rows() < 1) {
        throw std::invalid_argument("covariance must be a square matrix");
    }
    if (!covariance.allFinite()) {
        throw std::invalid_argument("covariance entries must be finite");
    }
    if (!(kappa > 0.0)) {
        throw std::invalid_argument("dispersion kappa must be positive");
    }
    if (!is_hermitian(covariance, kHermitianTol)) {
        throw std::invalid_argument("covariance must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(covariance, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol) {
        throw std::invalid_argument("covariance must be positive semi-definite");
    }
    const double trace = covariance.trace().real();
    if (std::abs(trace - kappa) > 1e-10 * std::abs(kappa)) {
        throw std::invalid_argument("covariance trace must equal the dispersion kappa");
    }
}

}  // namespace

GaussianFieldSpec::GaussianFieldSpec(ComplexMatrix covariance, double kappa)
    : covariance_(std::move(covariance)), kappa_(kappa) {
    validate_spec(covariance_, kappa_);
}

GaussianFieldSpec::GaussianFieldSpec(ComplexMatrix covariance)
    : covariance_(std::move(covariance)), kappa_(0.0) {
    if (covariance_.size() == 0) {
        throw std::invalid_argument("covariance must be a square matrix");
    }
    kappa_ = covariance_.trace().real();
    validate_spec(covariance_, kappa_);
}

GaussianFieldSpec GaussianFieldSpec::scaled(double factor) const {
    if (!(factor > 0.0)) {
        throw std::invalid_argument("scaling factor must be positive");
    }
    return GaussianFieldSpec(factor * covariance_, factor * kappa_);
}

GaussianFieldSpec pure_state_spec(const ComplexVector& psi, double kappa) {
    if (psi.size() < 1) {
        throw std::invalid_argument("state vector must be nonempty");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("state vector must be normalized");
    }
    if (!(kappa > 0.0)) {
        throw std::invalid_argument("dispersion kappa must be positive");
    }
    ComplexMatrix cov = kappa * (psi * psi.adjoint());
    return GaussianFieldSpec(std::move(cov), kappa);
}

FieldEnsemble::FieldEnsemble(ComplexMatrix samples, std::uint64_t seed,
                             GaussianFieldSpec source)
    : samples_(std::move(samples)), seed_(seed), source_(std::move(source)) {
    if (samples_.cols() < 1) {
        throw std::invalid_argument("an ensemble needs at least one sample");
    }
    if (samples_.rows() != source_.dim()) {
        throw std::invalid_argument("sample dimension does not match the source measure");
    }
    if (!samples_.allFinite()) {
        throw std::invalid_argument("sample entries must be finite");
    }
}

const ComplexMatrix& FieldEnsemble::samples() const {
    if (consumed_) {
        throw EnsembleConsumedError();
    }
    return samples_;
}

void FieldEnsemble::consume() {
    if (consumed_) {
        throw EnsembleConsumedError();
    }
    consumed_ = true;
}

FieldEnsemble sample_fields(const GaussianFieldSpec& spec, Eigen::Index count,
                            std::uint64_t seed, int threads) {
    if (count < 1) {
        throw std::invalid_argument("sample count must be at least 1");
    }
    const Eigen::Index n = spec.dim();

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(spec.covariance());
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("covariance eigendecomposition failed");
    }
    RealVector lambda = es.eigenvalues();
    if (lambda.minCoeff() < -kPsdTol) {
        throw std::invalid_argument("covariance must be positive semi-definite");
    }
    // Rank-deficient covariances (pure states) are routine; clamp the
    // round-off negatives.
    RealVector scale = lambda.cwiseMax(0.0).cwiseSqrt();
    ComplexMatrix basis = es.eigenvectors() * scale.asDiagonal();

    ComplexMatrix samples(n, count);
    for_each_block(count, threads, [&](std::int64_t block, std::int64_t begin, std::int64_t end) {
        GaussianStream stream(derive_stream(seed, static_cast<std::uint64_t>(block)));
        ComplexVector zeta(n);
        for (std::int64_t k = begin; k < end; ++k) {
            for (Eigen::Index i = 0; i < n; ++i) {
                zeta[i] = stream.next_circular();
            }
            samples.col(k).noalias() = basis * zeta;
        }
    });
    return FieldEnsemble(std::move(samples), seed, spec);
}

ComplexVector empirical_mean(const FieldEnsemble& e) {
    const ComplexMatrix& s = e.samples();
    return s.rowwise().mean();
}

ComplexMatrix empirical_covariance_c(const FieldEnsemble& e) {
    const ComplexMatrix& s = e.samples();
    return (s * s.adjoint()) / static_cast<double>(e.sample_count());
}

ComplexMatrix empirical_pseudo_covariance(const FieldEnsemble& e) {
    const ComplexMatrix& s = e.samples();
    return (s * s.transpose()) / static_cast<double>(e.sample_count());
}

double empirical_dispersion(const FieldEnsemble& e) {
    const ComplexMatrix& s = e.samples();
    return s.squaredNorm() / static_cast<double>(e.sample_count());
}

RealMatrix empirical_real_covariance(const FieldEnsemble& e) {
    const ComplexMatrix& s = e.samples();
    const Eigen::Index n = e.dim();
    RealMatrix stacked(2 * n, e.sample_count());
    stacked.topRows(n) = s.real();
    stacked.bottomRows(n) = s.imag();
    return (stacked * stacked.transpose()) / static_cast<double>(e.sample_count());
}

namespace {

void require_hermitian(const ComplexMatrix& a, const char* role) {
    if (!is_hermitian(a, kHermitianTol)) {
        throw std::invalid_argument(std::string(role) + " must be Hermitian");
    }
}

}  // namespace

double wick_quadratic(const GaussianFieldSpec& spec, const ComplexMatrix& a) {
    require_hermitian(a, "observable operator");
    if (a.rows() != spec.dim()) {
        throw std::invalid_argument("operator dimension does not match the measure");
    }
    return (spec.covariance() * a).trace().real();
}

double wick_quartic(const GaussianFieldSpec& spec, const ComplexMatrix& a,
                    const ComplexMatrix& b) {
    require_hermitian(a, "first operator");
    require_hermitian(b, "second operator");
    if (a.rows() != spec.dim() || b.rows() != spec.dim()) {
        throw std::invalid_argument("operator dimension does not match the measure");
    }
    const ComplexMatrix ca = spec.covariance() * a;
    const ComplexMatrix cb = spec.covariance() * b;
    return (ca.trace() * cb.trace() + (ca * cb).trace()).real();
}

FieldEnsemble field_scaling(const FieldEnsemble& e, double kappa) {
    if (!(kappa > 0.0)) {
        throw std::invalid_argument("scaling kappa must be positive");
    }
    ComplexMatrix scaled = std::sqrt(kappa) * e.samples();
    return FieldEnsemble(std::move(scaled), e.seed(), e.source_spec().scaled(kappa));
}

}  // namespace prequant
