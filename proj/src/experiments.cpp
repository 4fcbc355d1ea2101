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

#include "prequant/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <utility>

#include "prequant/dequantize.hpp"
#include "prequant/errors.hpp"
#include "prequant/formats.hpp"
#include "prequant/gaussian.hpp"
#include "prequant/quantum_register.hpp"
#include "prequant/rng.hpp"
#include "prequant/variables.hpp"

namespace prequant {

namespace {

class WallClock {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double monte_carlo_sigma(long n) { return 1.0 / std::sqrt(static_cast<double>(n)); }

std::vector<double> default_kappa_grid() {
    std::vector<double> grid(8);
    for (int i = 0; i < 8; ++i) {
        grid[static_cast<std::size_t>(i)] = std::pow(10.0, -3.0 + 2.0 * i / 7.0);
    }
    return grid;
}

GaussianFieldSpec isotropic_spec(long dimension, double kappa) {
    auto n = static_cast<Eigen::Index>(dimension);
    ComplexMatrix cov =
        (kappa / static_cast<double>(n)) * ComplexMatrix::Identity(n, n);
    return GaussianFieldSpec(std::move(cov), kappa);
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

}  // namespace

ExperimentConfig parse_config(const nlohmann::json& doc, const std::string& base_dir) {
    require(doc.is_object(), "config root must be a JSON object");
    ExperimentConfig cfg;
    cfg.base_dir = base_dir;
    for (const auto& [key, value] : doc.items()) {
        if (key == "dimension") {
            require(value.is_number_integer(), "dimension must be an integer");
            cfg.dimension = value.get<long>();
            require(cfg.dimension >= 1, "dimension must be at least 1");
        } else if (key == "kappa") {
            require(value.is_number(), "kappa must be a number");
            cfg.kappa = value.get<double>();
            cfg.kappa_set = true;
            require(cfg.kappa > 0.0, "kappa must be positive");
        } else if (key == "kappa_grid") {
            require(value.is_array() && !value.empty(), "kappa_grid must be a nonempty array");
            for (const auto& item : value) {
                require(item.is_number(), "kappa_grid entries must be numbers");
                double k = item.get<double>();
                require(k > 0.0, "kappa_grid entries must be positive");
                cfg.kappa_grid.push_back(k);
            }
        } else if (key == "sample_count") {
            require(value.is_number_integer(), "sample_count must be an integer");
            cfg.sample_count = value.get<long>();
            require(cfg.sample_count >= 1, "sample_count must be at least 1");
        } else if (key == "seed") {
            require(value.is_number_integer() && value.get<long long>() >= 0,
                    "seed must be a nonnegative integer");
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "variable_spec") {
            require(value.is_string(), "variable_spec must be a path string");
            cfg.variable_spec = value.get<std::string>();
        } else if (key == "function_spec") {
            require(value.is_string(), "function_spec must be a path string");
            cfg.function_spec = value.get<std::string>();
        } else if (key == "state_spec") {
            require(value.is_string(), "state_spec must be a path string");
            cfg.state_spec = value.get<std::string>();
        } else if (key == "output") {
            require(value.is_string(), "output must be a path string");
            cfg.output = value.get<std::string>();
        } else if (key == "format") {
            require(value.is_string(), "format must be a string");
            cfg.format = value.get<std::string>();
            require(cfg.format == "json" || cfg.format == "csv",
                    "format must be \"json\" or \"csv\"");
        } else {
            throw ConfigError("unknown config key \"" + key + "\"");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path + ": cannot open config file");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    std::string base = std::filesystem::path(path).parent_path().string();
    return parse_config(doc, base.empty() ? "." : base);
}

std::string resolve_path(const ExperimentConfig& cfg, const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (std::filesystem::path(cfg.base_dir) / p).string();
}

Report run_field_stats(const ExperimentConfig& cfg) {
    WallClock clock;
    Report report;
    report.command = "field-stats";
    report.seed = cfg.seed;

    GaussianFieldSpec spec = [&] {
        if (!cfg.state_spec.empty()) {
            require(!cfg.kappa_set,
                    "kappa is set both in the config and by the state file");
            GaussianFieldSpec s = load_state_spec(resolve_path(cfg, cfg.state_spec));
            require(cfg.dimension == 0 || cfg.dimension == s.dim(),
                    "dimension does not match the state file");
            return s;
        }
        require(cfg.dimension >= 1, "dimension is required without a state file");
        return isotropic_spec(cfg.dimension, cfg.kappa);
    }();

    report.config["dimension"] = static_cast<long>(spec.dim());
    if (cfg.state_spec.empty()) report.config["kappa"] = cfg.kappa;
    if (!cfg.state_spec.empty()) report.config["state_spec"] = cfg.state_spec;
    report.config["sample_count"] = cfg.sample_count;
    report.config["format"] = cfg.format;

    long n = cfg.sample_count;
    double kappa = spec.kappa();
    double sigma = monte_carlo_sigma(n);
    FieldEnsemble e =
        sample_fields(spec, n, derive_seed(cfg.seed, "field-stats/samples"), cfg.threads);

    report.checks.push_back(
        make_check("mean_norm", 0.0, empirical_mean(e).norm(), 5.0 * std::sqrt(kappa) * sigma));
    double spread = std::sqrt((spec.covariance() * spec.covariance()).trace().real());
    report.checks.push_back(
        make_check("dispersion", kappa, empirical_dispersion(e), 5.0 * spread * sigma));

    ComplexMatrix cov = empirical_covariance_c(e);
    report.checks.push_back(make_check("covariance_error", 0.0,
                                       (cov - spec.covariance()).norm(),
                                       5.0 * kappa * sigma));
    report.checks.push_back(make_check("pseudo_covariance_norm", 0.0,
                                       empirical_pseudo_covariance(e).norm(),
                                       5.0 * kappa * sigma));
    RealMatrix doubled = 2.0 * empirical_real_covariance(e);
    report.checks.push_back(make_check("real_complex_relation", 0.0,
                                       (real_block_of(cov) - doubled).norm(),
                                       5.0 * std::sqrt(2.0) * kappa * sigma));

    if (!cfg.dump_ensemble.empty()) {
        std::ofstream dump(cfg.dump_ensemble);
        require(static_cast<bool>(dump), cfg.dump_ensemble + ": cannot open dump file");
        write_ensemble_dump(dump, e);
    }

    report.seconds = clock.seconds();
    return report;
}

Report run_dequantize_check(const ExperimentConfig& cfg) {
    WallClock clock;
    Report report;
    report.command = "dequantize-check";
    report.seed = cfg.seed;

    require(!cfg.variable_spec.empty(), "dequantize-check needs a variable_spec file");
    PrequantumVariable v = load_variable_file(resolve_path(cfg, cfg.variable_spec));

    DensityOperator density = [&] {
        if (!cfg.state_spec.empty()) {
            DensityOperator d =
                to_density_operator(load_state_spec(resolve_path(cfg, cfg.state_spec)));
            require(d.dim() == v.dim(), "state and variable dimensions differ");
            return d;
        }
        auto n = v.dim();
        return DensityOperator(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
    }();
    require(cfg.dimension == 0 || cfg.dimension == v.dim(),
            "dimension does not match the variable file");

    std::vector<double> grid = cfg.kappa_grid.empty() ? default_kappa_grid() : cfg.kappa_grid;

    report.config["dimension"] = static_cast<long>(v.dim());
    report.config["kappa_grid"] = grid;
    report.config["variable_spec"] = cfg.variable_spec;
    if (!cfg.state_spec.empty()) report.config["state_spec"] = cfg.state_spec;
    report.config["sample_count"] = cfg.sample_count;
    report.config["format"] = cfg.format;

    PowerLawFit fit = remainder_scaling_exponent(v, density, grid);
    report.checks.push_back(make_check("remainder_slope", 2.0, fit.slope, 1e-3));
    report.checks.push_back(make_check("remainder_fit_r2", 1.0, fit.r_squared, 1e-3));

    Observable a = to_observable(v);
    double kappa_max = *std::max_element(grid.begin(), grid.end());
    for (double kappa : grid) {
        GaussianFieldSpec spec(kappa * density.matrix(), kappa);
        double exact = classical_average_exact(v, spec);
        double quantum_term = kappa * quantum_average(density, a);
        report.sweep.push_back({kappa, exact, quantum_term, asymptotic_gap(v, spec)});
    }

    GaussianFieldSpec spec_max(kappa_max * density.matrix(), kappa_max);
    FieldEnsemble e = sample_fields(spec_max, cfg.sample_count,
                                    derive_seed(cfg.seed, "dequantize-check/mc"),
                                    cfg.threads);
    MonteCarloEstimate mc = classical_average_mc(v, e, cfg.threads);
    report.checks.push_back(make_check("exact_vs_monte_carlo",
                                       classical_average_exact(v, spec_max), mc.value,
                                       5.0 * mc.standard_error));
    report.checks.push_back(make_check("quadratic_exactness", 0.0,
                                       asymptotic_gap(v.quadratic_part(), spec_max),
                                       1e-12));

    report.seconds = clock.seconds();
    return report;
}

Report run_parallelism_demo(const ExperimentConfig& cfg) {
    WallClock clock;
    Report report;
    report.command = "parallelism-demo";
    report.seed = cfg.seed;

    require(!cfg.function_spec.empty(), "parallelism-demo needs a function_spec file");
    BooleanFunction f = load_boolean_function(resolve_path(cfg, cfg.function_spec));

    report.config["kappa"] = cfg.kappa;
    report.config["function_spec"] = cfg.function_spec;
    report.config["sample_count"] = cfg.sample_count;
    report.config["format"] = cfg.format;

    double kappa = cfg.kappa;
    long n = cfg.sample_count;
    double sigma = monte_carlo_sigma(n);

    PureState psi_f = parallel_evaluation_state(f);
    auto out_dim = Eigen::Index{1} << f.output_bits();
    double amp = 1.0 / std::sqrt(static_cast<double>(Eigen::Index{1} << f.input_bits()));
    ComplexVector expected = ComplexVector::Zero(psi_f.dim());
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << f.input_bits()); ++x) {
        expected(static_cast<Eigen::Index>(basis_index(x, f(x), f.output_bits()))) = amp;
    }
    report.checks.push_back(make_check(
        "support_set", 0.0,
        (psi_f.amplitudes() - expected).lpNorm<Eigen::Infinity>(), 1e-12));

    ComplexVector start = ComplexVector::Zero(psi_f.dim());
    auto in_amps = uniform_superposition(f.input_bits()).amplitudes();
    for (Eigen::Index i = 0; i < in_amps.size(); ++i) {
        start(i * out_dim) = in_amps(i);
    }
    FieldEnsemble e = sample_fields(pure_state_spec(start, kappa), n,
                                    derive_seed(cfg.seed, "parallelism-demo/samples"),
                                    cfg.threads);
    e = pushforward_samples(oracle_unitary(f).matrix(), e);
    ComplexMatrix target = kappa * (psi_f.amplitudes() * psi_f.amplitudes().adjoint());
    report.checks.push_back(make_check("covariance_distance", 0.0,
                                       (empirical_covariance_c(e) - target).norm(),
                                       5.0 * kappa * sigma));

    if (f.output_bits() == 1 && (f.is_constant() || f.is_balanced())) {
        DeutschJozsaResult demo = deutsch_jozsa_demo(
            f, kappa, n, derive_seed(cfg.seed, "parallelism-demo/dj"), cfg.threads);
        ComplexVector sv = deutsch_jozsa_statevector(f).amplitudes();
        double p0_exact = std::norm(sv(0)) + std::norm(sv(1));
        bool agree = (demo.verdict == Verdict::kConstant) == (p0_exact > 0.5);
        report.checks.push_back(make_check("dj_p0", p0_exact, demo.p0_estimate, 1e-6));
        report.checks.push_back(
            make_check("dj_verdict_agrees", 1.0, agree ? 1.0 : 0.0, 0.0));
    }

    report.seconds = clock.seconds();
    return report;
}

}  // namespace prequant
