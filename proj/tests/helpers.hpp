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

#include <Eigen/Dense>

#include "prequant/gaussian.hpp"
#include "prequant/hilbert.hpp"
#include "prequant/rng.hpp"

namespace prequant::testing {

inline ComplexVector random_vector(Eigen::Index n, GaussianStream& g) {
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = g.next_circular();
    return v;
}

inline ComplexVector random_unit_vector(Eigen::Index n, GaussianStream& g) {
    ComplexVector v = random_vector(n, g);
    return v / v.norm();
}

inline ComplexMatrix random_matrix(Eigen::Index n, GaussianStream& g) {
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = g.next_circular();
    }
    return m;
}

inline ComplexMatrix random_hermitian(Eigen::Index n, GaussianStream& g) {
    ComplexMatrix m = random_matrix(n, g);
    return 0.5 * (m + m.adjoint()).eval();
}

inline ComplexMatrix random_unitary(Eigen::Index n, GaussianStream& g) {
    Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(n, g));
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

/// Full-rank random measure with the requested dispersion.
inline GaussianFieldSpec random_spec(Eigen::Index n, double kappa, GaussianStream& g) {
    ComplexMatrix m = random_matrix(n, g);
    ComplexMatrix cov = m * m.adjoint();
    cov *= kappa / cov.trace().real();
    return GaussianFieldSpec(std::move(cov), kappa);
}

}  // namespace prequant::testing
