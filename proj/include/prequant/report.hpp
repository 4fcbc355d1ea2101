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
#include <string>
#include <vector>

#include <json.hpp>

namespace prequant {

/// One verified quantity: passes when |observed - expected| <= tolerance.
struct CheckRecord {
    std::string name;
    double expected;
    double observed;
    double tolerance;
    bool pass;
};

CheckRecord make_check(std::string name, double expected, double observed,
                       double tolerance);

/// One row of the dispersion sweep behind the scaling-exponent fit. Sweep
/// rows are exported through the CSV format only; the JSON schema is fixed.
struct SweepRow {
    double kappa;
    double classical_avg;
    double quantum_term;
    double gap;
};

/// Machine-readable outcome of one CLI run. `config` echoes the effective
/// experiment parameters (worker count and output destination excluded, so
/// reports are reproducible byte for byte apart from `seconds`).
struct Report {
    std::string command;
    std::uint64_t seed = 0;
    nlohmann::ordered_json config;
    std::vector<CheckRecord> checks;
    std::vector<SweepRow> sweep;
    double seconds = 0.0;

    bool pass() const;
};

/// Fixed key order: command, version, seed, config, checks, pass, seconds.
nlohmann::ordered_json report_to_json(const Report& r);

/// The sweep table: header "kappa,classical_avg,quantum_term,gap".
std::string report_to_csv(const Report& r);

}  // namespace prequant
