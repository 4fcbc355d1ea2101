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

#include "prequant/report.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "prequant/version.hpp"

namespace prequant {

CheckRecord make_check(std::string name, double expected, double observed,
                       double tolerance) {
    bool pass = std::isfinite(observed) && std::abs(observed - expected) <= tolerance;
    return {std::move(name), expected, observed, tolerance, pass};
}

bool Report::pass() const {
    for (const CheckRecord& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

nlohmann::ordered_json report_to_json(const Report& r) {
    nlohmann::ordered_json out;
    out["command"] = r.command;
    out["version"] = kVersion;
    out["seed"] = r.seed;
    out["config"] = r.config;
    auto checks = nlohmann::ordered_json::array();
    for (const CheckRecord& c : r.checks) {
        nlohmann::ordered_json item;
        item["name"] = c.name;
        item["expected"] = c.expected;
        item["observed"] = c.observed;
        item["tolerance"] = c.tolerance;
        item["pass"] = c.pass;
        checks.push_back(std::move(item));
    }
    out["checks"] = std::move(checks);
    out["pass"] = r.pass();
    out["seconds"] = r.seconds;
    return out;
}

std::string report_to_csv(const Report& r) {
    std::string out = "kappa,classical_avg,quantum_term,gap\n";
    char buf[160];
    for (const SweepRow& row : r.sweep) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", row.kappa,
                      row.classical_avg, row.quantum_term, row.gap);
        out += buf;
    }
    return out;
}

}  // namespace prequant
