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

#include "prequant/hilbert.hpp"

#include <stdexcept>

namespace prequant {

RealPhaseVector::RealPhaseVector(RealVector q_in, RealVector p_in)
    : q(std::move(q_in)), p(std::move(p_in)) {
    if (q.size() != p.size() || q.size() < 1) {
        throw std::invalid_argument("phase vector needs q and p of equal length >= 1");
    }
    if (!q.allFinite() || !p.allFinite()) {
        throw std::invalid_argument("phase vector entries must be finite");
    }
}

RealPhaseVector apply_symplectic(const RealPhaseVector& v) {
    return RealPhaseVector(v.p, -v.q);
}

ComplexVector complexify(const RealPhaseVector& v) {
    ComplexVector out(v.dim());
    out.real() = v.q;
    out.imag() = v.p;
    return out;
}

RealPhaseVector realify(const ComplexVector& v) {
    if (v.size() < 1) {
        throw std::invalid_argument("cannot realify an empty vector");
    }
    return RealPhaseVector(v.real(), v.imag());
}

RealMatrix symplectic_matrix(Eigen::Index n) {
    if (n < 1) {
        throw std::invalid_argument("symplectic_matrix needs n >= 1");
    }
    RealMatrix j = RealMatrix::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = RealMatrix::Identity(n, n);
    j.bottomLeftCorner(n, n) = -RealMatrix::Identity(n, n);
    return j;
}

namespace {

void require_even_square(const RealMatrix& a) {
    if (a.rows() != a.cols() || a.rows() < 2 || a.rows() % 2 != 0) {
        throw std::invalid_argument(
            "operator must be square with even dimension to act on (q, p)");
    }
    if (!a.allFinite()) {
        throw std::invalid_argument("operator entries must be finite");
    }
}

}  // namespace

bool commutes_with_symplectic(const RealMatrix& a, double tol) {
    if (tol <= 0.0) {
        throw std::invalid_argument("commutation tolerance must be positive");
    }
    require_even_square(a);
    const RealMatrix j = symplectic_matrix(a.rows() / 2);
    return (a * j - j * a).norm() <= tol;
}

ComplexMatrix complex_operator_of(const RealMatrix& a, double tol) {
    if (!commutes_with_symplectic(a, tol)) {
        throw std::invalid_argument(
            "operator does not commute with the symplectic structure; "
            "it has no C-linear representation");
    }
    const Eigen::Index n = a.rows() / 2;
    // A J-commuting block matrix is [[X, Y], [-Y, X]]; average the redundant
    // blocks so inputs that commute only within tol are projected cleanly.
    RealMatrix x = 0.5 * (a.topLeftCorner(n, n) + a.bottomRightCorner(n, n));
    RealMatrix y = 0.5 * (a.topRightCorner(n, n) - a.bottomLeftCorner(n, n));
    ComplexMatrix c(n, n);
    c.real() = x;
    c.imag() = -y;
    return c;
}

RealMatrix real_block_of(const ComplexMatrix& c) {
    if (c.rows() != c.cols() || c.rows() < 1) {
        throw std::invalid_argument("real_block_of needs a square matrix");
    }
    const Eigen::Index n = c.rows();
    RealMatrix a(2 * n, 2 * n);
    a.topLeftCorner(n, n) = c.real();
    a.topRightCorner(n, n) = -c.imag();
    a.bottomLeftCorner(n, n) = c.imag();
    a.bottomRightCorner(n, n) = c.real();
    return a;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    return (a - a.adjoint()).norm() <= tol;
}

Complex quadratic_form(const ComplexMatrix& a, const ComplexVector& phi) {
    if (a.rows() != a.cols() || a.cols() != phi.size()) {
        throw std::invalid_argument("quadratic form dimension mismatch");
    }
    return phi.dot(a * phi);
}

double hermitian_quadratic_form(const ComplexMatrix& a, const ComplexVector& phi) {
    return quadratic_form(a, phi).real();
}

}  // namespace prequant
