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

#include <vector>

#include "prequant/gaussian.hpp"
#include "prequant/variables.hpp"

namespace prequant {

/// Hermitian, positive semi-definite, unit trace.
class DensityOperator {
  public:
    explicit DensityOperator(ComplexMatrix matrix);

    const ComplexMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

  private:
    ComplexMatrix matrix_;
};

/// A bounded self-adjoint operator on the complex space.
class Observable {
  public:
    explicit Observable(ComplexMatrix matrix);

    const ComplexMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

  private:
    ComplexMatrix matrix_;
};

/// State map: a Gaussian measure goes to its complex covariance divided by
/// the dispersion. Pure-state measures map to the rank-1 projector.
DensityOperator to_density_operator(const GaussianFieldSpec& spec);

/// Variable map: f goes to half its Hessian at zero, i.e. the quadratic
/// operator. Additive: the image of f1 + f2 is the sum of the images.
Observable to_observable(const PrequantumVariable& v);

/// Tr(D A).
double quantum_average(const DensityOperator& d, const Observable& a);

/// | classical_average_exact(v, spec) - kappa * Tr(D A) | with D and A the
/// images of spec and v. Zero for purely quadratic variables; of order
/// kappa^2 for the quartic family.
double asymptotic_gap(const PrequantumVariable& v, const GaussianFieldSpec& spec);

struct PowerLawFit {
    double slope;
    double intercept;
    double r_squared;
};

/// Least-squares fit of log y against log x.
PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

/// Sweeps the dispersion over `kappa_grid` with the state shape held fixed
/// (covariance kappa * D), computes the gap at each point, and fits its
/// scaling exponent. Requires at least 4 grid points spanning two decades
/// and a variable with a nonzero quartic part; the exponent is 2.
PowerLawFit remainder_scaling_exponent(const PrequantumVariable& v,
                                       const DensityOperator& d,
                                       const std::vector<double>& kappa_grid);

}  // namespace prequant
