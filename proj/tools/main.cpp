// Copyright 2026 The qsearchlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qsearchlab/experiment.hpp"
#include "qsearchlab/version.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw qsl::UsageError("cannot read config file '" + path + "'");
    }
    std::ostringstream content;
    content << file.rdbuf();
    return content.str();
}

qsl::AnswerSpec parse_answer_flag(const std::string& text) {
    qsl::AnswerSpec spec;
    if (text == "random") {
        spec.policy = qsl::AnswerPolicy::random;
    } else if (text == "exhaustive") {
        spec.policy = qsl::AnswerPolicy::exhaustive;
    } else if (text.rfind("fixed:", 0) == 0) {
        spec.policy = qsl::AnswerPolicy::fixed;
        const std::string digits = text.substr(6);
        try {
            std::size_t consumed = 0;
            spec.fixed_value = std::stoull(digits, &consumed);
            if (consumed != digits.size() || digits.empty()) {
                throw qsl::UsageError("bad fixed answer in '" + text + "'");
            }
        } catch (const qsl::UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw qsl::UsageError("bad fixed answer in '" + text + "'");
        }
    } else {
        throw qsl::UsageError("answer policy must be random, exhaustive, or fixed:<a>");
    }
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsearchlab: oracle-search circuit simulator and claim verifier"};
    app.set_version_flag("--version", std::string("qsearchlab ") + qsl::kVersion);

    std::string config_path;
    std::string algorithm;
    int n = 0;
    int n_max = 0;
    std::string answer;
    std::uint64_t seed = 0;
    int iterations = 0;
    double detuning_exponent = 0.0;
    double tol_purity = 0.0;
    std::string format;
    std::string out_path;
    bool claims_only = false;

    app.add_option("--config", config_path,
                   "JSON config file; explicit flags override its fields");
    auto* algorithm_opt =
        app.add_option("--algorithm", algorithm,
                       "grover | bv | classical-naive | classical-sophisticated | "
                       "qudit-grover | qudit-bv");
    auto* n_opt = app.add_option("--n", n, "guess-register width (N = 2^n records)");
    auto* n_max_opt = app.add_option("--n-max", n_max, "sweep widths n..n-max");
    auto* answer_opt =
        app.add_option("--answer", answer, "random | exhaustive | fixed:<a>");
    auto* seed_opt = app.add_option("--seed", seed, "seed for answer draws and samples");
    auto* iterations_opt =
        app.add_option("--iterations", iterations,
                       "override the default floor(pi/4 sqrt(N)) round count");
    auto* detuning_opt = app.add_option("--detuning-exponent", detuning_exponent,
                                        "level-spacing exponent p (spacing ~ N^-p)");
    auto* tol_purity_opt =
        app.add_option("--tol-purity", tol_purity, "product-verdict purity tolerance");
    auto* format_opt = app.add_option("--format", format, "json | csv | text");
    auto* out_opt = app.add_option("--out", out_path, "output path (default stdout)");
    auto* claims_only_opt =
        app.add_flag("--claims-only", claims_only, "emit claim verdicts only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? qsl::kExitPass : qsl::kExitUsage;
    }

    try {
        qsl::ExperimentConfig config;
        if (!config_path.empty()) {
            config = qsl::parse_config_json(read_file(config_path));
        }
        if (algorithm_opt->count() > 0) {
            config.algorithm = qsl::algorithm_from_string(algorithm);
        }
        if (n_opt->count() > 0) {
            config.n = n;
        }
        if (n_max_opt->count() > 0) {
            config.n_max = n_max;
        }
        if (answer_opt->count() > 0) {
            config.answer = parse_answer_flag(answer);
        }
        if (seed_opt->count() > 0) {
            config.seed = seed;
        }
        if (iterations_opt->count() > 0) {
            config.iterations = iterations;
        }
        if (detuning_opt->count() > 0) {
            config.detuning_exponent = detuning_exponent;
        }
        if (tol_purity_opt->count() > 0) {
            config.tolerances.purity = tol_purity;
        }
        if (format_opt->count() > 0) {
            config.format = qsl::format_from_string(format);
        }
        if (out_opt->count() > 0) {
            config.out_path = out_path;
        }
        if (claims_only_opt->count() > 0) {
            config.claims_only = true;
        }

        qsl::validate_config(config);
        const qsl::ExperimentResult result = qsl::run_experiment(config);
        qsl::emit_report(config, result, config.format, config.out_path);
        return qsl::exit_code_for(result);
    } catch (const qsl::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return qsl::kExitUsage;
    } catch (const qsl::WitnessDisagreement& e) {
        std::cerr << "internal witness disagreement: " << e.what() << "\n";
        return qsl::kExitWitnessDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qsl::kExitUsage;
    }
}
