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

#pragma once

#include <cstdint>

#include "prequant/hilbert.hpp"

namespace prequant {

/// A zero-mean, J-invariant Gaussian measure on the complexified phase
/// space, given by its complex covariance operator and its dispersion
/// kappa = E ||phi||^2. J-invariance is realized as circular symmetry:
/// the pseudo-covariance E[phi phi^T] vanishes, which also makes the
/// complex covariance exactly twice the real one.
class GaussianFieldSpec {
  public:
    /// Validates: Hermitian within kHermitianTol, eigenvalues >= -kPsdTol,
    /// trace equal to kappa within relative 1e-10, kappa > 0.
    GaussianFieldSpec(ComplexMatrix covariance, double kappa);

    /// Same, with kappa taken from the trace.
    explicit GaussianFieldSpec(ComplexMatrix covariance);

    const ComplexMatrix& covariance() const { return covariance_; }
    double kappa() const { return kappa_; }
    Eigen::Index dim() const { return covariance_.rows(); }

    /// Covariance and dispersion multiplied by `factor` > 0.
    GaussianFieldSpec scaled(double factor) const;

  private:
    ComplexMatrix covariance_;
    double kappa_;
};

/// The measure labeling a normalized pure state: covariance kappa * psi psi^dagger.
GaussianFieldSpec pure_state_spec(const ComplexVector& psi, double kappa);

/// A finite ensemble of sampled complex field vectors (one per column).
/// Measuring an ensemble consumes it: every later statistical read throws
/// EnsembleConsumedError.
class FieldEnsemble {
  public:
    FieldEnsemble(ComplexMatrix samples, std::uint64_t seed, GaussianFieldSpec source);

    Eigen::Index dim() const { return samples_.rows(); }
    Eigen::Index sample_count() const { return samples_.cols(); }
    std::uint64_t seed() const { return seed_; }
    const GaussianFieldSpec& source_spec() const { return source_; }
    bool consumed() const { return consumed_; }

    /// Sample matrix; throws EnsembleConsumedError once consumed.
    const ComplexMatrix& samples() const;

    /// Marks the ensemble as measured. Throws if already consumed.
    void consume();

  private:
    ComplexMatrix samples_;
    std::uint64_t seed_;
    GaussianFieldSpec source_;
    bool consumed_ = false;
};

/// Draws `count` fields phi = sum_k sqrt(lambda_k) zeta_k u_k from the
/// eigendecomposition of the covariance, with independent standard
/// circularly-symmetric complex Gaussians zeta_k. Deterministic for a fixed
/// seed and independent of `threads`.
FieldEnsemble sample_fields(const GaussianFieldSpec& spec, Eigen::Index count,
                            std::uint64_t seed, int threads = 1);

ComplexVector empirical_mean(const FieldEnsemble& e);

/// (1/N) sum phi phi^dagger. No mean subtraction: the measure has zero mean.
ComplexMatrix empirical_covariance_c(const FieldEnsemble& e);

/// (1/N) sum phi phi^T; vanishes in expectation for a J-invariant measure.
ComplexMatrix empirical_pseudo_covariance(const FieldEnsemble& e);

/// (1/N) sum ||phi||^2.
double empirical_dispersion(const FieldEnsemble& e);

/// 2n x 2n covariance of the realified samples (q; p); computed on demand,
/// never stored. The complex covariance embeds as twice this matrix.
RealMatrix empirical_real_covariance(const FieldEnsemble& e);

/// E <A phi, phi> = Tr(B^c A) for Hermitian A, with B^c the complex
/// covariance. The trace is over the complex space.
double wick_quadratic(const GaussianFieldSpec& spec, const ComplexMatrix& a);

/// E[<A phi, phi> <B phi, phi>] = Tr(B^c A) Tr(B^c B) + Tr(B^c A B^c B)
/// for Hermitian A, B (fourth Gaussian moment of a circular measure).
double wick_quartic(const GaussianFieldSpec& spec, const ComplexMatrix& a,
                    const ComplexMatrix& b);

/// Change of variables phi -> sqrt(kappa) phi: samples scaled by
/// sqrt(kappa), covariance and dispersion by kappa.
FieldEnsemble field_scaling(const FieldEnsemble& e, double kappa);

}  // namespace prequant
