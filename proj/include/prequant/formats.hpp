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

#include <iosfwd>
#include <string>
#include <string_view>

#include "prequant/gaussian.hpp"
#include "prequant/quantum_register.hpp"
#include "prequant/variables.hpp"

namespace prequant {

// Text formats. Matrix entries are "re:im" complex literals, row-major,
// whitespace separated; '#' starts a comment. Parse failures raise
// ParseError carrying the source name and 1-based line number.

/// "re:im" with enough digits to round-trip a double.
std::string format_complex(Complex z);

/// Strict inverse of format_complex; the colon is mandatory.
Complex parse_complex(std::string_view token);

/// Variable file:
///   dim N
///   quadratic
///   <N rows of N entries>
///   quartic LAMBDA        (zero or more blocks)
///   <N rows of N entries>
PrequantumVariable parse_variable_file(std::istream& in, const std::string& source);
PrequantumVariable load_variable_file(const std::string& path);

/// Boolean function file: header "N_IN N_OUT", then 2^N_IN output values
/// in ascending input order.
BooleanFunction parse_boolean_function(std::istream& in, const std::string& source);
BooleanFunction load_boolean_function(const std::string& path);

/// Field measure file:
///   dim N
///   kappa K               (optional; default 1 for psi, trace for covariance)
/// followed by either
///   psi
///   <1 row of N entries>
/// or
///   covariance
///   <N rows of N entries>
GaussianFieldSpec parse_state_spec(std::istream& in, const std::string& source);
GaussianFieldSpec load_state_spec(const std::string& path);

/// Debug export: one sample per line, comma-separated "re:im" pairs.
void write_ensemble_dump(std::ostream& out, const FieldEnsemble& e);

}  // namespace prequant
