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

#include "prequant/formats.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "prequant/errors.hpp"

namespace prequant {

namespace {

/// Line-oriented tokenizer. Blank lines and '#' comments are skipped;
/// every token remembers the line it came from.
class LineReader {
  public:
    LineReader(std::istream& in, std::string source)
        : in_(in), source_(std::move(source)) {}

    /// Next non-blank line split on whitespace; false at end of input.
    bool next_line(std::vector<std::string>& tokens) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            tokens.clear();
            std::istringstream split(raw);
            std::string tok;
            while (split >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    long line() const { return line_; }
    const std::string& source() const { return source_; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(source_, line_ == 0 ? 1 : line_, message);
    }

  private:
    std::istream& in_;
    std::string source_;
    long line_ = 0;
};

long parse_long(const LineReader& r, const std::string& token) {
    char* end = nullptr;
    long value = std::strtol(token.c_str(), &end, 10);
    if (end != token.c_str() + token.size() || token.empty()) {
        r.fail("expected an integer, got \"" + token + "\"");
    }
    return value;
}

double parse_double(const LineReader& r, const std::string& token) {
    char* end = nullptr;
    double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || token.empty()) {
        r.fail("expected a number, got \"" + token + "\"");
    }
    return value;
}

Complex parse_complex_or_fail(const LineReader& r, const std::string& token) {
    auto colon = token.find(':');
    if (colon == std::string::npos) {
        r.fail("expected a re:im entry, got \"" + token + "\"");
    }
    return {parse_double(r, token.substr(0, colon)),
            parse_double(r, token.substr(colon + 1))};
}

/// Reads `rows` lines of exactly `cols` re:im entries each.
ComplexMatrix read_matrix(LineReader& r, Eigen::Index rows, Eigen::Index cols,
                          const std::string& what) {
    ComplexMatrix m(rows, cols);
    std::vector<std::string> tokens;
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (!r.next_line(tokens)) {
            r.fail("unexpected end of input inside " + what);
        }
        if (static_cast<Eigen::Index>(tokens.size()) != cols) {
            r.fail(what + " row has " + std::to_string(tokens.size()) +
                   " entries, expected " + std::to_string(cols));
        }
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = parse_complex_or_fail(r, tokens[static_cast<std::size_t>(j)]);
        }
    }
    return m;
}

Eigen::Index read_dim_header(LineReader& r) {
    std::vector<std::string> tokens;
    if (!r.next_line(tokens)) {
        r.fail("empty input, expected \"dim N\"");
    }
    if (tokens.size() != 2 || tokens[0] != "dim") {
        r.fail("expected \"dim N\" header");
    }
    long dim = parse_long(r, tokens[1]);
    if (dim < 1) {
        r.fail("dimension must be at least 1");
    }
    return static_cast<Eigen::Index>(dim);
}

[[noreturn]] void rethrow_as_parse(const LineReader& r, long line,
                                   const std::exception& e) {
    throw ParseError(r.source(), line, e.what());
}

}  // namespace

std::string format_complex(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g:%.17g", z.real(), z.imag());
    return buf;
}

Complex parse_complex(std::string_view token) {
    std::string s(token);
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        throw ParseError("<token>", 1, "expected a re:im entry, got \"" + s + "\"");
    }
    auto to_double = [&](const std::string& part) {
        char* end = nullptr;
        double value = std::strtod(part.c_str(), &end);
        if (part.empty() || end != part.c_str() + part.size()) {
            throw ParseError("<token>", 1, "expected a number, got \"" + part + "\"");
        }
        return value;
    };
    return {to_double(s.substr(0, colon)), to_double(s.substr(colon + 1))};
}

PrequantumVariable parse_variable_file(std::istream& in, const std::string& source) {
    LineReader r(in, source);
    Eigen::Index dim = read_dim_header(r);

    std::vector<std::string> tokens;
    if (!r.next_line(tokens) || tokens.size() != 1 || tokens[0] != "quadratic") {
        r.fail("expected \"quadratic\" block after the dim header");
    }
    long block_line = r.line();
    ComplexMatrix quadratic = read_matrix(r, dim, dim, "quadratic block");

    std::vector<QuarticTerm> quartic;
    std::vector<long> quartic_lines;
    while (r.next_line(tokens)) {
        if (tokens.size() != 2 || tokens[0] != "quartic") {
            r.fail("expected \"quartic LAMBDA\" block, got \"" + tokens[0] + "\"");
        }
        double lambda = parse_double(r, tokens[1]);
        quartic_lines.push_back(r.line());
        quartic.push_back({lambda, read_matrix(r, dim, dim, "quartic block")});
    }

    try {
        return PrequantumVariable(std::move(quadratic), std::move(quartic));
    } catch (const std::invalid_argument& e) {
        rethrow_as_parse(r, block_line, e);
    }
}

PrequantumVariable load_variable_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path, 1, "cannot open file");
    }
    return parse_variable_file(in, path);
}

BooleanFunction parse_boolean_function(std::istream& in, const std::string& source) {
    LineReader r(in, source);
    std::vector<std::string> tokens;
    if (!r.next_line(tokens)) {
        r.fail("empty input, expected \"N_IN N_OUT\" header");
    }
    if (tokens.size() != 2) {
        r.fail("expected \"N_IN N_OUT\" header");
    }
    long n_in = parse_long(r, tokens[0]);
    long n_out = parse_long(r, tokens[1]);
    long header_line = r.line();
    if (n_in < 1 || n_out < 1 || n_in + n_out > kMaxRegisterBits) {
        r.fail("register of " + std::to_string(n_in) + "+" + std::to_string(n_out) +
               " bits is outside 1.." + std::to_string(kMaxRegisterBits));
    }

    std::size_t expected = std::size_t{1} << n_in;
    std::vector<std::uint32_t> table;
    table.reserve(expected);
    while (r.next_line(tokens)) {
        for (const std::string& tok : tokens) {
            long v = parse_long(r, tok);
            if (v < 0 || v >= (long{1} << n_out)) {
                r.fail("output value " + tok + " out of range for " +
                       std::to_string(n_out) + " output bits");
            }
            if (table.size() == expected) {
                r.fail("truth table has more than " + std::to_string(expected) +
                       " entries");
            }
            table.push_back(static_cast<std::uint32_t>(v));
        }
    }
    if (table.size() != expected) {
        throw ParseError(source, r.line() == 0 ? header_line : r.line(),
                         "truth table has " + std::to_string(table.size()) +
                             " entries, expected " + std::to_string(expected));
    }
    return BooleanFunction(static_cast<int>(n_in), static_cast<int>(n_out),
                           std::move(table));
}

BooleanFunction load_boolean_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path, 1, "cannot open file");
    }
    return parse_boolean_function(in, path);
}

GaussianFieldSpec parse_state_spec(std::istream& in, const std::string& source) {
    LineReader r(in, source);
    Eigen::Index dim = read_dim_header(r);

    std::vector<std::string> tokens;
    if (!r.next_line(tokens)) {
        r.fail("expected \"psi\" or \"covariance\" block");
    }
    double kappa = 1.0;
    bool have_kappa = false;
    if (tokens[0] == "kappa") {
        if (tokens.size() != 2) {
            r.fail("expected \"kappa K\"");
        }
        kappa = parse_double(r, tokens[1]);
        have_kappa = true;
        if (!r.next_line(tokens)) {
            r.fail("expected \"psi\" or \"covariance\" block");
        }
    }

    if (tokens.size() != 1 || (tokens[0] != "psi" && tokens[0] != "covariance")) {
        r.fail("expected \"psi\" or \"covariance\" block, got \"" + tokens[0] + "\"");
    }
    bool pure = tokens[0] == "psi";
    long block_line = r.line();

    ComplexMatrix body = read_matrix(r, pure ? 1 : dim, dim,
                                     pure ? "psi row" : "covariance block");
    if (r.next_line(tokens)) {
        r.fail("unexpected trailing content \"" + tokens[0] + "\"");
    }

    try {
        if (pure) {
            return pure_state_spec(body.row(0).transpose(), kappa);
        }
        return have_kappa ? GaussianFieldSpec(std::move(body), kappa)
                          : GaussianFieldSpec(std::move(body));
    } catch (const std::invalid_argument& e) {
        rethrow_as_parse(r, block_line, e);
    }
}

GaussianFieldSpec load_state_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path, 1, "cannot open file");
    }
    return parse_state_spec(in, path);
}

void write_ensemble_dump(std::ostream& out, const FieldEnsemble& e) {
    const ComplexMatrix& s = e.samples();
    for (Eigen::Index k = 0; k < s.cols(); ++k) {
        for (Eigen::Index i = 0; i < s.rows(); ++i) {
            if (i > 0) out << ',';
            out << format_complex(s(i, k));
        }
        out << '\n';
    }
}

}  // namespace prequant
