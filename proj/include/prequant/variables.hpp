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
#include "prequant/hilbert.hpp"

namespace prequant {

/// One quartic contribution coefficient * <A phi, phi>^2.
struct QuarticTerm {
    double coefficient;
    ComplexMatrix op;
};

/// A classical field variable from the quadratic + quartic family
///
///   f(phi) = <A phi, phi> + sum_i lambda_i <A_i phi, phi>^2
///
/// with all operators Hermitian. By construction f(0) = 0 and f is phase
/// invariant (in particular invariant under the symplectic J = -i), the two
/// defining properties of the variable class.
class PrequantumVariable {
  public:
    explicit PrequantumVariable(ComplexMatrix quadratic,
                                std::vector<QuarticTerm> quartic = {});

    const ComplexMatrix& quadratic() const { return quadratic_; }
    const std::vector<QuarticTerm>& quartic_terms() const { return quartic_; }
    Eigen::Index dim() const { return quadratic_.rows(); }

    /// True iff some quartic term contributes (nonzero coefficient and operator).
    bool has_quartic_part() const;

    /// The variable with all quartic terms dropped.
    PrequantumVariable quadratic_part() const;

    /// Pointwise sum; the quantum image of a sum is the sum of the images.
    friend PrequantumVariable operator+(const PrequantumVariable& lhs,
                                        const PrequantumVariable& rhs);

  private:
    ComplexMatrix quadratic_;
    std::vector<QuarticTerm> quartic_;
};

/// f(phi). Real by construction.
double evaluate(const PrequantumVariable& v, const ComplexVector& phi);

/// Half the second derivative of f at 0, i.e. the quadratic operator A.
/// The quartic terms contribute nothing at the origin.
ComplexMatrix hessian_at_zero(const PrequantumVariable& v);

/// Central-difference estimate of half the Hessian at 0, formed on the 2n
/// real coordinates and converted to the complex picture. The estimate is
/// cross-checked at step/2; if the two disagree by more than 10% the step
/// is rejected as unreliable.
ComplexMatrix finite_difference_hessian(const PrequantumVariable& v, double step);

struct MonteCarloEstimate {
    double value;
    double standard_error;
};

/// Ensemble mean and standard error of f. Summation is compensated and
/// block-structured, so the result does not depend on the worker count.
MonteCarloEstimate classical_average_mc(const PrequantumVariable& v,
                                        const FieldEnsemble& e, int threads = 1);

/// Closed-form Gaussian average:
///   Tr(B A) + sum_i lambda_i [ (Tr(B A_i))^2 + Tr((B A_i)^2) ]
/// with B the complex covariance of the measure.
double classical_average_exact(const PrequantumVariable& v,
                               const GaussianFieldSpec& spec);

}  // namespace prequant
