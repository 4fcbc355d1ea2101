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

#include <complex>

#include <Eigen/Dense>

namespace prequant {

// Real phase space conventions
// ----------------------------
// A classical field configuration is a pair (q, p) of real n-vectors,
// stacked as a 2n-vector (q; p). The symplectic operator is the block
// matrix J = [[0, I], [-I, 0]], so J(q, p) = (p, -q) and J^2 = -I.
//
// The complex picture identifies (q, p) with q + i p. Under that
// identification J acts as multiplication by -i, and a real block operator
// A = [[X, Y], [-Y, X]] (the J-commuting class) acts as the C-linear
// operator C = X - i Y. The inverse embedding of a complex matrix C is
// [[Re C, -Im C], [Im C, Re C]].
//
// The complex scalar product <x, y> is conjugate-linear in the SECOND
// argument throughout, so <A phi, phi> = phi^dagger A phi.

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Absolute Frobenius tolerance for Hermiticity checks.
inline constexpr double kHermitianTol = 1e-10;
/// Absolute Frobenius tolerance for the J-commutation check.
inline constexpr double kSymplecticTol = 1e-10;
/// Eigenvalues above -kPsdTol count as nonnegative.
inline constexpr double kPsdTol = 1e-10;

/// A point of the real phase space: field coordinates q and momenta p of
/// equal length.
struct RealPhaseVector {
    RealVector q;
    RealVector p;

    RealPhaseVector(RealVector q_in, RealVector p_in);

    Eigen::Index dim() const { return q.size(); }
};

/// J(q, p) = (p, -q).
RealPhaseVector apply_symplectic(const RealPhaseVector& v);

/// (q, p) -> q + i p.
ComplexVector complexify(const RealPhaseVector& v);

/// q + i p -> (q, p).
RealPhaseVector realify(const ComplexVector& v);

/// The 2n x 2n block matrix [[0, I], [-I, 0]].
RealMatrix symplectic_matrix(Eigen::Index n);

/// True iff ||A J - J A||_F <= tol. A must be square with even dimension.
bool commutes_with_symplectic(const RealMatrix& a, double tol);

/// The C-linear operator acting as A through the q + i p identification.
/// Requires commutes_with_symplectic(a, tol); the block structure is
/// symmetrized before conversion so near-commuting inputs are projected
/// onto the commuting class.
ComplexMatrix complex_operator_of(const RealMatrix& a, double tol = kSymplecticTol);

/// Inverse of complex_operator_of: [[Re C, -Im C], [Im C, Re C]].
RealMatrix real_block_of(const ComplexMatrix& c);

bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

/// <A phi, phi> = phi^dagger A phi.
Complex quadratic_form(const ComplexMatrix& a, const ComplexVector& phi);

/// Real part of <A phi, phi>; the value itself is real for Hermitian A.
double hermitian_quadratic_form(const ComplexMatrix& a, const ComplexVector& phi);

}  // namespace prequant
