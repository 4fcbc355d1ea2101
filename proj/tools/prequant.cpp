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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "prequant/errors.hpp"
#include "prequant/experiments.hpp"
#include "prequant/report.hpp"

namespace {

void emit_error(const std::string& type, const std::string& message) {
    nlohmann::ordered_json err;
    err["error"]["type"] = type;
    err["error"]["message"] = message;
    std::cout << err.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical Gaussian random fields reproducing quantum averages"};
    app.require_subcommand(1);

    std::string config_path;
    std::uint64_t seed = 0;
    long samples = 0;
    std::string output;
    std::string format;
    std::string dump;
    int threads = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file")->required();
        sub->add_option("--seed", seed, "Override the config seed");
        sub->add_option("--samples", samples, "Override the config sample count");
        sub->add_option("--output", output, "Also write the report to this file");
        sub->add_option("--format", format, "Report format: json or csv");
        sub->add_option("--threads", threads, "Worker threads for sampling");
    };

    CLI::App* field = app.add_subcommand(
        "field-stats", "Sample a Gaussian field and verify its moments");
    CLI::App* deq = app.add_subcommand(
        "dequantize-check",
        "Fit the classical-minus-quantum gap exponent and cross-check averages");
    CLI::App* par = app.add_subcommand(
        "parallelism-demo", "Push a field through a Boolean oracle and verify it");
    add_common(field);
    add_common(deq);
    add_common(par);
    field->add_option("--dump-ensemble", dump, "Write the sampled fields to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    CLI::App* active = app.get_subcommands().front();
    try {
        prequant::ExperimentConfig cfg = prequant::load_config(config_path);
        if (active->count("--seed") > 0) cfg.seed = seed;
        if (active->count("--samples") > 0) {
            if (samples < 1) throw prequant::ConfigError("sample count must be at least 1");
            cfg.sample_count = samples;
        }
        if (active->count("--output") > 0) cfg.output = output;
        if (active->count("--format") > 0) {
            if (format != "json" && format != "csv") {
                throw prequant::ConfigError("format must be \"json\" or \"csv\"");
            }
            cfg.format = format;
        }
        if (active->count("--threads") > 0) {
            if (threads < 1) throw prequant::ConfigError("threads must be at least 1");
            cfg.threads = threads;
        }
        if (active == field && field->count("--dump-ensemble") > 0) {
            cfg.dump_ensemble = dump;
        }
        if (cfg.format == "csv" && active != deq) {
            throw prequant::ConfigError(
                "csv output holds the dispersion sweep and is only available "
                "for dequantize-check");
        }

        prequant::Report report;
        if (active == field) {
            report = prequant::run_field_stats(cfg);
        } else if (active == deq) {
            report = prequant::run_dequantize_check(cfg);
        } else {
            report = prequant::run_parallelism_demo(cfg);
        }

        std::string text = cfg.format == "csv"
                               ? prequant::report_to_csv(report)
                               : prequant::report_to_json(report).dump(2) + "\n";
        std::cout << text;
        if (!cfg.output.empty()) {
            std::ofstream out(cfg.output);
            if (!out) {
                throw prequant::ConfigError(cfg.output + ": cannot open output file");
            }
            out << text;
        }
        return report.pass() ? 0 : 1;
    } catch (const prequant::ParseError& e) {
        emit_error("parse", e.what());
        return 2;
    } catch (const prequant::ConfigError& e) {
        emit_error("config", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("runtime", e.what());
        return 2;
    }
}
