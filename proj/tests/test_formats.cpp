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
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "prequant/dequantize.hpp"
#include "prequant/errors.hpp"
#include "prequant/formats.hpp"
#include "prequant/gaussian.hpp"
#include "prequant/variables.hpp"

using namespace prequant;

namespace {

long line_of(const std::string& text, auto&& parse) {
    std::istringstream in(text);
    try {
        parse(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

long variable_error_line(const std::string& text) {
    return line_of(text, [](std::istream& in) { parse_variable_file(in, "mem"); });
}

long state_error_line(const std::string& text) {
    return line_of(text, [](std::istream& in) { parse_state_spec(in, "mem"); });
}

}  // namespace

TEST_CASE("complex tokens round trip through their text form") {
    CHECK(format_complex(Complex(1.5, -2.25)) == "1.5:-2.25");
    CHECK(parse_complex("3:4") == Complex(3.0, 4.0));
    CHECK(parse_complex("-0.5:1e-3") == Complex(-0.5, 1e-3));

    const Complex samples[] = {
        {1.0 / 3.0, -2.0 / 7.0}, {1e300, -1e-300}, {0.0, -0.0}, {M_PI, std::sqrt(2.0)}};
    for (Complex z : samples) {
        Complex back = parse_complex(format_complex(z));
        CHECK(back.real() == z.real());
        CHECK(back.imag() == z.imag());
    }
}

TEST_CASE("malformed complex tokens are rejected") {
    CHECK_THROWS_AS(parse_complex("3"), ParseError);
    CHECK_THROWS_AS(parse_complex("a:b"), ParseError);
    CHECK_THROWS_AS(parse_complex("3:"), ParseError);
    CHECK_THROWS_AS(parse_complex(":4"), ParseError);
    CHECK_THROWS_AS(parse_complex("3:4junk"), ParseError);
    CHECK_THROWS_AS(parse_complex(""), ParseError);
}

TEST_CASE("variable files parse quadratic and quartic blocks") {
    std::istringstream in(
        "# curvature with one quartic correction\n"
        "dim 2\n"
        "quadratic\n"
        "1:0 0:0  # identity row\n"
        "0:0 1:0\n"
        "\n"
        "quartic 0.5\n"
        "1:0 0:0\n"
        "0:0 1:0\n");
    PrequantumVariable v = parse_variable_file(in, "mem");
    CHECK(v.dim() == 2);
    CHECK(v.has_quartic_part());
    ComplexVector phi(2);
    phi << 1.0, 0.0;
    CHECK(evaluate(v, phi) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK((hessian_at_zero(v) - ComplexMatrix::Identity(2, 2)).norm() == 0.0);
}

TEST_CASE("a variable file may omit quartic blocks entirely") {
    std::istringstream in("dim 1\nquadratic\n2:0\n");
    PrequantumVariable v = parse_variable_file(in, "mem");
    CHECK_FALSE(v.has_quartic_part());
    ComplexVector phi(1);
    phi << Complex(3.0, 4.0);
    CHECK(evaluate(v, phi) == doctest::Approx(50.0).epsilon(1e-14));
}

TEST_CASE("variable file errors carry the offending line number") {
    CHECK(variable_error_line("dim 2\nquadratic\n1:0 0:0\n0:0\n") == 4);   // short row
    CHECK(variable_error_line("dim 1\nquadratic\n0:1\n") == 2);            // not Hermitian
    CHECK(variable_error_line("dimension 2\n") == 1);                      // bad header
    CHECK(variable_error_line("dim 0\nquadratic\n") == 1);
    CHECK(variable_error_line("") == 1);
    CHECK(variable_error_line("dim 1\nquadratic\n1:0\ncubic 3\n1:0\n") == 4);
    CHECK(variable_error_line("dim 1\nquadratic\n1:0\nquartic\n1:0\n") == 4);
    CHECK(variable_error_line("dim 1\nquadratic\n1:0\nquartic x\n1:0\n") == 4);
    CHECK_THROWS_AS(
        []() {
            std::istringstream in("dim 2\nquadratic\n1:0 0:0\n");
            return parse_variable_file(in, "mem");
        }(),
        ParseError);  // truncated matrix
}

TEST_CASE("a quartic coefficient matrix must match the dimension") {
    std::istringstream in("dim 2\nquadratic\n1:0 0:0\n0:0 1:0\nquartic 1\n1:0\n");
    CHECK_THROWS_AS(parse_variable_file(in, "mem"), ParseError);
}

TEST_CASE("boolean function tables may span multiple lines") {
    std::istringstream in("2 1\n0 1\n1 0\n");
    BooleanFunction f = parse_boolean_function(in, "mem");
    CHECK(f.input_bits() == 2);
    CHECK(f.output_bits() == 1);
    CHECK(f(0) == 0);
    CHECK(f(1) == 1);
    CHECK(f(2) == 1);
    CHECK(f(3) == 0);
    CHECK(f.is_balanced());
}

TEST_CASE("boolean function files validate header and table") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_boolean_function(in, "mem");
    };
    CHECK_THROWS_AS(parse("1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("5 6\n0\n"), ParseError);  // 11 bits
    CHECK_THROWS_AS(parse("1 1\n0\n"), ParseError);  // one entry missing
    CHECK_THROWS_AS(parse("1 1\n0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse("1 1\n0 2\n"), ParseError);  // value out of range
    CHECK_THROWS_AS(parse("1 1\n0 -1\n"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_NOTHROW(parse("1 2\n3 0\n"));
}

TEST_CASE("a pure state spec builds the rank-one measure") {
    const double r = 1.0 / std::sqrt(2.0);
    std::ostringstream text;
    text << "dim 2\nkappa 0.5\npsi\n" << format_complex(Complex(r, 0.0)) << ' '
         << format_complex(Complex(r, 0.0)) << '\n';
    std::istringstream in(text.str());
    GaussianFieldSpec spec = parse_state_spec(in, "mem");
    CHECK(spec.kappa() == 0.5);
    CHECK(spec.covariance()(0, 0).real() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(spec.covariance()(0, 1).real() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("a covariance spec takes its dispersion from the trace") {
    std::istringstream in("dim 2\ncovariance\n1:0 0:0\n0:0 1:0\n");
    GaussianFieldSpec spec = parse_state_spec(in, "mem");
    CHECK(spec.kappa() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("an explicit dispersion must match the covariance trace") {
    std::istringstream ok("dim 1\nkappa 2\ncovariance\n2:0\n");
    CHECK(parse_state_spec(ok, "mem").kappa() == 2.0);
    CHECK(state_error_line("dim 1\nkappa 1\ncovariance\n2:0\n") == 3);
}

TEST_CASE("state spec errors carry line numbers") {
    CHECK(state_error_line("dim 2\npsi\n1:0\n") == 3);  // short psi row
    CHECK(state_error_line("dim 1\npsi\n2:0\n") == 2);  // not normalized
    CHECK(state_error_line("dim 1\npsi\n1:0\nextra\n") == 4);
    CHECK(state_error_line("dim 2\ncovariance\n1:0 2:0\n2:0 1:0\n") == 2);  // indefinite
    CHECK(state_error_line("dim 1\nkappa\ncovariance\n1:0\n") == 2);
    CHECK(state_error_line("dim 1\nwavefunction\n1:0\n") == 2);
    CHECK(state_error_line("dim 1\n") == 1);
}

TEST_CASE("missing files surface as parse errors at line one") {
    CHECK_THROWS_AS(load_variable_file("/nonexistent/v.txt"), ParseError);
    CHECK_THROWS_AS(load_boolean_function("/nonexistent/f.txt"), ParseError);
    CHECK_THROWS_AS(load_state_spec("/nonexistent/s.txt"), ParseError);
    CHECK(line_of("", [](std::istream&) {
              load_variable_file("/nonexistent/v.txt");
          }) == 1);
}

TEST_CASE("ensemble dumps round trip bit for bit") {
    GaussianFieldSpec spec(ComplexMatrix::Identity(3, 3), 3.0);
    FieldEnsemble e = sample_fields(spec, 5, 9);
    std::ostringstream out;
    write_ensemble_dump(out, e);

    std::istringstream back(out.str());
    std::string line;
    ComplexMatrix recon(3, 5);
    Eigen::Index k = 0;
    while (std::getline(back, line)) {
        REQUIRE(k < 5);
        std::istringstream fields(line);
        std::string token;
        Eigen::Index i = 0;
        while (std::getline(fields, token, ',')) {
            REQUIRE(i < 3);
            recon(i, k) = parse_complex(token);
            ++i;
        }
        CHECK(i == 3);
        ++k;
    }
    CHECK(k == 5);
    CHECK((recon - e.samples()).norm() == 0.0);
}
