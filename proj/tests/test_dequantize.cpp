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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "prequant/dequantize.hpp"
#include "prequant/gaussian.hpp"
#include "prequant/variables.hpp"

using namespace prequant;
using prequant::testing::random_hermitian;
using prequant::testing::random_unit_vector;

namespace {

DensityOperator pure_density(const ComplexVector& psi) {
    return DensityOperator(psi * psi.adjoint());
}

}  // namespace

TEST_CASE("a projector onto a unit vector is a valid density operator") {
    GaussianStream g(11);
    for (int trial = 0; trial < 20; ++trial) {
        ComplexVector psi = random_unit_vector(5, g);
        DensityOperator d = pure_density(psi);
        CHECK(d.dim() == 5);
        CHECK(std::abs(d.matrix().trace().real() - 1.0) < 1e-12);
    }
}

TEST_CASE("density operators reject bad matrices") {
    ComplexMatrix two = ComplexMatrix::Identity(2, 2);
    CHECK_THROWS_AS(DensityOperator{two}, std::invalid_argument);  // trace 2

    ComplexMatrix skew(2, 2);
    skew << 0.5, Complex(0.0, 0.3), Complex(0.0, 0.3), 0.5;
    CHECK_THROWS_AS(DensityOperator{skew}, std::invalid_argument);  // not Hermitian

    ComplexMatrix indefinite(2, 2);
    indefinite << 1.5, 0.0, 0.0, -0.5;
    CHECK_THROWS_AS(DensityOperator{indefinite}, std::invalid_argument);

    CHECK_THROWS_AS(DensityOperator(ComplexMatrix::Ones(2, 3)), std::invalid_argument);
}

TEST_CASE("observables must be Hermitian and square") {
    ComplexMatrix ok(2, 2);
    ok << 1.0, Complex(0.0, -1.0), Complex(0.0, 1.0), -1.0;
    CHECK_NOTHROW(Observable{ok});

    ComplexMatrix skew(2, 2);
    skew << 0.0, 1.0, -1.0, 0.0;
    CHECK_THROWS_AS(Observable{skew}, std::invalid_argument);
    CHECK_THROWS_AS(Observable{ComplexMatrix::Zero(1, 2)}, std::invalid_argument);
}

TEST_CASE("normalizing a pure state measure recovers the projector") {
    GaussianStream g(12);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexVector psi = random_unit_vector(4, g);
        GaussianFieldSpec spec = pure_state_spec(psi, 0.37);
        DensityOperator d = to_density_operator(spec);
        CHECK((d.matrix() - psi * psi.adjoint()).norm() <= 1e-12);
    }
}

TEST_CASE("normalizing an isotropic measure gives the maximally mixed state") {
    const int n = 6;
    GaussianFieldSpec spec(0.25 * ComplexMatrix::Identity(n, n), 0.25 * n);
    DensityOperator d = to_density_operator(spec);
    CHECK((d.matrix() - ComplexMatrix::Identity(n, n) / static_cast<double>(n)).norm() <=
          1e-12);
}

TEST_CASE("rescaling a measure leaves its normalization unchanged") {
    GaussianStream g(13);
    GaussianFieldSpec spec = prequant::testing::random_spec(3, 0.8, g);
    DensityOperator base = to_density_operator(spec);
    DensityOperator scaled = to_density_operator(spec.scaled(17.0));
    CHECK((base.matrix() - scaled.matrix()).norm() <= 1e-12);
}

TEST_CASE("the observable of a variable is its curvature at the origin") {
    ComplexMatrix a(2, 2);
    a << 2.0, Complex(0.0, 1.0), Complex(0.0, -1.0), 0.5;
    PrequantumVariable v(a);
    CHECK((to_observable(v).matrix() - a).norm() == 0.0);

    // Quartic corrections do not contribute to the curvature at zero.
    PrequantumVariable w = v + PrequantumVariable(ComplexMatrix::Zero(2, 2),
                                                  {{0.7, ComplexMatrix::Identity(2, 2)}});
    CHECK((to_observable(w).matrix() - a).norm() == 0.0);
}

TEST_CASE("quantum averages reproduce matrix elements of pure states") {
    ComplexVector psi(2);
    psi << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    ComplexMatrix flip(2, 2);
    flip << 0.0, 1.0, 1.0, 0.0;
    CHECK(quantum_average(pure_density(psi), Observable(flip)) == doctest::Approx(1.0));

    GaussianStream g(14);
    for (int trial = 0; trial < 20; ++trial) {
        ComplexVector phi = random_unit_vector(5, g);
        ComplexMatrix a = random_hermitian(5, g);
        const double direct = phi.dot(a * phi).real();
        CHECK(quantum_average(pure_density(phi), Observable(a)) ==
              doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("the maximally mixed state averages the spectrum") {
    const int n = 4;
    ComplexMatrix a(n, n);
    a.setZero();
    a.diagonal() << 1.0, 2.0, 3.0, 4.0;
    DensityOperator mixed(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
    CHECK(quantum_average(mixed, Observable(a)) == doctest::Approx(2.5));
}

TEST_CASE("quantum averages require matching dimensions") {
    DensityOperator d(ComplexMatrix::Identity(2, 2) / 2.0);
    Observable a(ComplexMatrix::Identity(3, 3));
    CHECK_THROWS_AS(quantum_average(d, a), std::invalid_argument);
}

TEST_CASE("the first-order term is exact for quadratic variables") {
    GaussianStream g(15);
    for (int trial = 0; trial < 10; ++trial) {
        PrequantumVariable v(random_hermitian(4, g));
        GaussianFieldSpec spec = prequant::testing::random_spec(4, 1.3, g);
        CHECK(asymptotic_gap(v, spec) <= 1e-12);
    }
}

TEST_CASE("the scalar quartic gap has the closed form two lambda kappa squared") {
    const double lambda = 0.5;
    ComplexMatrix one = ComplexMatrix::Identity(1, 1);
    PrequantumVariable v(one, {{lambda, one}});
    const double kappa = 0.01;
    GaussianFieldSpec spec(kappa * one, kappa);
    CHECK(asymptotic_gap(v, spec) ==
          doctest::Approx(2.0 * lambda * kappa * kappa).epsilon(1e-9));
}

TEST_CASE("an exact power law is fit exactly") {
    std::vector<double> x = {0.001, 0.01, 0.1, 1.0};
    std::vector<double> y;
    y.reserve(x.size());
    for (double xi : x) {
        y.push_back(3.0 * xi * xi);
    }
    PowerLawFit fit = fit_power_law(x, y);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power-law fits reject degenerate inputs") {
    CHECK_THROWS_AS(fit_power_law({1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law({1.0, 2.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law({1.0, -2.0}, {1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(fit_power_law({1.0, 2.0}, {0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(fit_power_law({2.0, 2.0}, {1.0, 3.0}), std::domain_error);
}

TEST_CASE("the remainder of a scalar quartic variable scales as kappa squared") {
    ComplexMatrix one = ComplexMatrix::Identity(1, 1);
    PrequantumVariable v(one, {{0.5, one}});
    DensityOperator d(one);
    std::vector<double> grid = {1e-3, 1e-2, 1e-1, 1.0, 10.0};
    PowerLawFit fit = remainder_scaling_exponent(v, d, grid);
    CHECK(std::abs(fit.slope - 2.0) <= 1e-6);
    CHECK(fit.r_squared > 0.999999);
}

TEST_CASE("the remainder exponent is near two for generic quartic variables") {
    GaussianStream g(16);
    ComplexMatrix a = random_hermitian(4, g);
    ComplexMatrix b = random_hermitian(4, g);
    PrequantumVariable v(a, {{0.3, b}});
    ComplexVector psi = random_unit_vector(4, g);
    DensityOperator d = pure_density(psi);
    std::vector<double> grid;
    for (int i = 0; i < 8; ++i) {
        grid.push_back(std::pow(10.0, -3.0 + 2.0 * i / 7.0));
    }
    PowerLawFit fit = remainder_scaling_exponent(v, d, grid);
    CHECK(fit.slope > 1.9);
    CHECK(fit.slope < 2.1);
    CHECK(fit.r_squared > 0.999);
}

TEST_CASE("purely quadratic variables have no remainder to fit") {
    PrequantumVariable v(ComplexMatrix::Identity(2, 2));
    DensityOperator d(ComplexMatrix::Identity(2, 2) / 2.0);
    std::vector<double> grid = {1e-3, 1e-2, 1e-1, 1.0};
    CHECK_THROWS_AS(remainder_scaling_exponent(v, d, grid), std::domain_error);
}

TEST_CASE("remainder fits validate the kappa grid") {
    ComplexMatrix one = ComplexMatrix::Identity(1, 1);
    PrequantumVariable v(one, {{0.5, one}});
    DensityOperator d(one);
    CHECK_THROWS_AS(remainder_scaling_exponent(v, d, {1e-3, 1e-2, 1e-1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(remainder_scaling_exponent(v, d, {1e-3, 1e-2, 1e-1, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(remainder_scaling_exponent(v, d, {0.01, 0.02, 0.05, 0.1}),
                    std::invalid_argument);  // less than two decades
    ComplexMatrix two = ComplexMatrix::Identity(2, 2);
    PrequantumVariable w(two, {{0.5, two}});
    CHECK_THROWS_AS(remainder_scaling_exponent(w, d, {1e-3, 1e-2, 1e-1, 1.0}),
                    std::invalid_argument);  // dimension mismatch
}
