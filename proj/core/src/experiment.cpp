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

#include "qsearchlab/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "claims_registry_data.hpp"
#include "qsearchlab/algorithms.hpp"
#include "qsearchlab/version.hpp"

namespace qsl {

using ordered_json = nlohmann::ordered_json;

namespace {

const std::pair<AlgorithmKind, const char*> kAlgorithmNames[] = {
    {AlgorithmKind::grover, "grover"},
    {AlgorithmKind::bv, "bv"},
    {AlgorithmKind::classical_naive, "classical-naive"},
    {AlgorithmKind::classical_sophisticated, "classical-sophisticated"},
    {AlgorithmKind::qudit_grover, "qudit-grover"},
    {AlgorithmKind::qudit_bv, "qudit-bv"},
};

const std::pair<OutputFormat, const char*> kFormatNames[] = {
    {OutputFormat::json, "json"},
    {OutputFormat::csv, "csv"},
    {OutputFormat::text, "text"},
};

bool is_qudit(AlgorithmKind kind) {
    return kind == AlgorithmKind::qudit_grover || kind == AlgorithmKind::qudit_bv;
}

bool is_grover_family(AlgorithmKind kind) {
    return kind == AlgorithmKind::grover || kind == AlgorithmKind::qudit_grover;
}

std::uint64_t sample_from_table(const std::vector<double>& table, std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
    double cumulative = 0.0;
    for (std::uint64_t i = 0; i < table.size(); ++i) {
        cumulative += table[i];
        if (u < cumulative) {
            return i;
        }
    }
    return static_cast<std::uint64_t>(table.size()) - 1;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string run_key(int n, std::uint64_t answer) {
    return "n=" + std::to_string(n) + " a=" + std::to_string(answer);
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

// Per-(n, answer) evidence gathered by the run loop; consumed by the claim
// checks below.
struct RunArtifacts {
    RunRecord record;
    std::optional<SearchResult> qubit;
    std::optional<EntanglementReport> entanglement;
    std::optional<QuditSearchResult> qudit;
    std::optional<ClassicalSearchResult> classical;
    double qudit_max_deviation = 0.0;
};

std::vector<std::uint64_t> answers_for(const ExperimentConfig& config, int n,
                                       std::mt19937_64& rng) {
    const std::uint64_t num_records = std::uint64_t{1} << n;
    switch (config.answer.policy) {
    case AnswerPolicy::exhaustive: {
        std::vector<std::uint64_t> all(num_records);
        for (std::uint64_t a = 0; a < num_records; ++a) {
            all[a] = a;
        }
        return all;
    }
    case AnswerPolicy::fixed:
        return {config.answer.fixed_value};
    case AnswerPolicy::random:
    default:
        return {rng() & (num_records - 1)};
    }
}

} // namespace

std::string to_string(AlgorithmKind kind) {
    for (const auto& [value, name] : kAlgorithmNames) {
        if (value == kind) {
            return name;
        }
    }
    return "unknown";
}

std::string to_string(AnswerPolicy policy) {
    switch (policy) {
    case AnswerPolicy::random:
        return "random";
    case AnswerPolicy::fixed:
        return "fixed";
    case AnswerPolicy::exhaustive:
        return "exhaustive";
    }
    return "unknown";
}

std::string to_string(OutputFormat format) {
    for (const auto& [value, name] : kFormatNames) {
        if (value == format) {
            return name;
        }
    }
    return "unknown";
}

AlgorithmKind algorithm_from_string(const std::string& text) {
    for (const auto& [value, name] : kAlgorithmNames) {
        if (text == name) {
            return value;
        }
    }
    throw UsageError("unknown algorithm '" + text + "'");
}

OutputFormat format_from_string(const std::string& text) {
    for (const auto& [value, name] : kFormatNames) {
        if (text == name) {
            return value;
        }
    }
    throw UsageError("unknown output format '" + text + "'");
}

namespace {

ordered_json config_json(const ExperimentConfig& config) {
    ordered_json doc;
    doc["algorithm"] = to_string(config.algorithm);
    doc["n"] = config.n;
    if (config.n_max != 0) {
        doc["n_max"] = config.n_max;
    }
    ordered_json answer;
    answer["policy"] = to_string(config.answer.policy);
    if (config.answer.policy == AnswerPolicy::fixed) {
        answer["value"] = config.answer.fixed_value;
    }
    doc["answer"] = answer;
    doc["seed"] = config.seed;
    if (config.iterations.has_value()) {
        doc["iterations"] = *config.iterations;
    }
    doc["tolerances"] = {{"norm", config.tolerances.norm},
                         {"purity", config.tolerances.purity},
                         {"entropy_bits", config.tolerances.entropy_bits}};
    doc["detuning_exponent"] = config.detuning_exponent;
    doc["output"] = {{"path", config.out_path}, {"format", to_string(config.format)}};
    doc["claims_only"] = config.claims_only;
    return doc;
}

} // namespace

std::string config_to_json(const ExperimentConfig& config) {
    return config_json(config).dump(2);
}

ExperimentConfig parse_config_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw UsageError("config must be a JSON object");
    }

    static const char* known_keys[] = {"algorithm",  "n",
                                       "n_max",      "answer",
                                       "seed",       "iterations",
                                       "tolerances", "detuning_exponent",
                                       "output",     "claims_only"};
    for (const auto& [key, unused] : doc.items()) {
        (void)unused;
        bool found = false;
        for (const char* k : known_keys) {
            if (key == k) {
                found = true;
                break;
            }
        }
        if (!found) {
            throw UsageError("unknown config key '" + key + "'");
        }
    }

    ExperimentConfig config;
    try {
        if (doc.contains("algorithm")) {
            config.algorithm = algorithm_from_string(doc["algorithm"].get<std::string>());
        }
        if (doc.contains("n")) {
            config.n = doc["n"].get<int>();
        }
        if (doc.contains("n_max")) {
            config.n_max = doc["n_max"].get<int>();
        }
        if (doc.contains("answer")) {
            const auto& answer = doc["answer"];
            const std::string policy = answer.at("policy").get<std::string>();
            if (policy == "random") {
                config.answer.policy = AnswerPolicy::random;
            } else if (policy == "exhaustive") {
                config.answer.policy = AnswerPolicy::exhaustive;
            } else if (policy == "fixed") {
                config.answer.policy = AnswerPolicy::fixed;
                config.answer.fixed_value = answer.at("value").get<std::uint64_t>();
            } else {
                throw UsageError("unknown answer policy '" + policy + "'");
            }
        }
        if (doc.contains("seed")) {
            config.seed = doc["seed"].get<std::uint64_t>();
        }
        if (doc.contains("iterations")) {
            config.iterations = doc["iterations"].get<int>();
        }
        if (doc.contains("tolerances")) {
            const auto& tol = doc["tolerances"];
            if (tol.contains("norm")) {
                config.tolerances.norm = tol["norm"].get<double>();
            }
            if (tol.contains("purity")) {
                config.tolerances.purity = tol["purity"].get<double>();
            }
            if (tol.contains("entropy_bits")) {
                config.tolerances.entropy_bits = tol["entropy_bits"].get<double>();
            }
        }
        if (doc.contains("detuning_exponent")) {
            config.detuning_exponent = doc["detuning_exponent"].get<double>();
        }
        if (doc.contains("output")) {
            const auto& output = doc["output"];
            if (output.contains("path")) {
                config.out_path = output["path"].get<std::string>();
            }
            if (output.contains("format")) {
                config.format = format_from_string(output["format"].get<std::string>());
            }
        }
        if (doc.contains("claims_only")) {
            config.claims_only = doc["claims_only"].get<bool>();
        }
    } catch (const UsageError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed config field: ") + e.what());
    }
    return config;
}

void validate_config(const ExperimentConfig& config) {
    if (config.n < 1) {
        throw UsageError("n must be at least 1");
    }
    if (config.n_max != 0 && config.n_max < config.n) {
        throw UsageError("n_max must be at least n");
    }
    const int last = config.last_n();
    if (is_qudit(config.algorithm)) {
        if (last > 12) {
            throw UsageError("qudit runs apply dense 2^n x 2^n transforms; n is "
                             "capped at 12");
        }
        if (config.answer.policy == AnswerPolicy::exhaustive && last > 8) {
            throw UsageError("exhaustive qudit sweeps multiply 2^n answers by "
                             "2^n x 2^n transforms; n is capped at 8");
        }
    } else if (last > 16) {
        // Trajectories keep every snapshot; a width-16 search already holds
        // ~400 snapshots of 2^17 amplitudes.
        throw UsageError("register runs are capped at n = 16 (trajectory memory)");
    }
    if (config.answer.policy == AnswerPolicy::exhaustive && last > kMaxExhaustiveWidth) {
        throw UsageError("exhaustive answer sweeps are capped at n = " +
                         std::to_string(kMaxExhaustiveWidth));
    }
    if (config.answer.policy == AnswerPolicy::fixed &&
        config.answer.fixed_value >= (std::uint64_t{1} << config.n)) {
        throw UsageError("fixed answer is out of range for the smallest width in "
                         "the sweep");
    }
    if (config.iterations.has_value()) {
        if (!is_grover_family(config.algorithm)) {
            throw UsageError("the iterations override applies to grover runs only");
        }
        if (*config.iterations < 0) {
            throw UsageError("iterations must be nonnegative");
        }
    }
    if (!(config.detuning_exponent > 0.0)) {
        throw UsageError("detuning exponent must be positive");
    }
    if (!(config.tolerances.norm > 0.0) || !(config.tolerances.purity > 0.0) ||
        !(config.tolerances.entropy_bits > 0.0)) {
        throw UsageError("tolerances must be positive");
    }
}

const std::string& claims_registry_json() {
    static const std::string content = detail::kClaimsRegistryJson;
    return content;
}

const std::vector<ClaimSpec>& claims_registry() {
    static const std::vector<ClaimSpec> registry = [] {
        std::vector<ClaimSpec> specs;
        const ordered_json doc = ordered_json::parse(claims_registry_json());
        for (const auto& entry : doc.at("claims")) {
            ClaimSpec spec;
            spec.id = entry.at("id").get<std::string>();
            spec.anchor = entry.at("anchor").get<std::string>();
            spec.description = entry.value("description", "");
            for (const auto& name : entry.at("applies_to")) {
                spec.applies_to.push_back(name.get<std::string>());
            }
            specs.push_back(std::move(spec));
        }
        return specs;
    }();
    return registry;
}

namespace {

const ClaimSpec& find_claim_spec(const std::string& id) {
    for (const ClaimSpec& spec : claims_registry()) {
        if (spec.id == id) {
            return spec;
        }
    }
    throw std::logic_error("claim id '" + id + "' missing from the registry");
}

// ---------------------------------------------------------------------------
// claim checks
// ---------------------------------------------------------------------------

class ClaimCollector {
  public:
    ClaimCollector(AlgorithmKind kind, std::vector<ClaimReport>& out)
        : algorithm_(to_string(kind)), out_(out) {}

    // Runs `eval` if the registry applies the claim to this algorithm. The
    // evaluator fills measured/expected/pass and may veto emission by
    // returning false (a claim that is not assessable under this config).
    template <typename Eval>
    void add(const std::string& id, Eval&& eval) {
        const ClaimSpec& spec = find_claim_spec(id);
        if (std::find(spec.applies_to.begin(), spec.applies_to.end(), algorithm_) ==
            spec.applies_to.end()) {
            return;
        }
        ClaimReport report;
        report.claim_id = spec.id;
        report.anchor = spec.anchor;
        Stopwatch timer;
        const bool emit = eval(report);
        report.runtime_ms = timer.elapsed_ms();
        if (emit) {
            out_.push_back(std::move(report));
        }
    }

  private:
    std::string algorithm_;
    std::vector<ClaimReport>& out_;
};

std::vector<ClaimReport> evaluate_claims(const ExperimentConfig& config,
                                         const std::vector<RunArtifacts>& runs,
                                         const std::vector<PrecisionReport>& precision) {
    std::vector<ClaimReport> claims;
    ClaimCollector collect(config.algorithm, claims);
    const std::string run_count = std::to_string(runs.size()) + " runs";

    collect.add("bv-single-query", [&](ClaimReport& r) {
        std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
        std::uint64_t hi = 0;
        for (const RunArtifacts& run : runs) {
            lo = std::min(lo, run.record.ledger.quantum_queries);
            hi = std::max(hi, run.record.ledger.quantum_queries);
        }
        r.measured = "quantum queries in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "] over " + run_count;
        r.expected = "exactly 1 per run";
        r.pass = (lo == 1 && hi == 1);
        return true;
    });

    collect.add("bv-certain-identification", [&](ClaimReport& r) {
        double worst = 0.0;
        bool top_matches = true;
        for (const RunArtifacts& run : runs) {
            worst = std::max(worst, std::abs(run.record.success_probability - 1.0));
            top_matches = top_matches && (run.record.top_guess == run.record.answer);
        }
        r.measured = "max |p(answer) - 1| = " + format_double(worst) +
                     (top_matches ? ", top guess always the answer"
                                  : ", top guess mismatch");
        r.expected = "point mass on the answer within 1e-12";
        r.pass = top_matches && worst <= 1e-12;
        return true;
    });

    collect.add("bv-no-entanglement", [&](ClaimReport& r) {
        double min_purity = 1.0;
        bool all_product = true;
        for (const RunArtifacts& run : runs) {
            for (const SnapshotVerdicts& snap : run.entanglement->snapshots) {
                all_product = all_product && snap.fully_product;
                for (const CutVerdict& cut : snap.cuts) {
                    min_purity = std::min(min_purity, cut.purity);
                }
            }
        }
        r.measured = "min cut purity = 1 - " + format_double(1.0 - min_purity) +
                     " over " + run_count;
        r.expected = "every snapshot fully product (purity >= 1 - " +
                     format_double(config.tolerances.purity) + ")";
        r.pass = all_product;
        return true;
    });

    collect.add("bv-orthogonal-outputs", [&](ClaimReport& r) {
        if (config.answer.policy != AnswerPolicy::exhaustive) {
            return false; // needs all answers at a fixed width
        }
        double worst = 0.0;
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            if (runs[i].record.n > 6 || !runs[i].qubit.has_value()) {
                continue;
            }
            for (std::size_t j = i + 1; j < runs.size(); ++j) {
                if (runs[j].record.n != runs[i].record.n) {
                    continue;
                }
                const Amplitude overlap =
                    inner_product(runs[i].qubit->trajectory.state("psi3"),
                                  runs[j].qubit->trajectory.state("psi3"));
                worst = std::max(worst, std::abs(overlap));
                ++pairs;
            }
        }
        if (pairs == 0) {
            return false;
        }
        r.measured = "max |<psi3(a)|psi3(a')>| = " + format_double(worst) + " over " +
                     std::to_string(pairs) + " pairs";
        r.expected = "below 1e-12";
        r.pass = worst < 1e-12;
        return true;
    });

    collect.add("grover-iteration-count", [&](ClaimReport& r) {
        bool count_ok = true;
        bool ledger_ok = true;
        for (const RunArtifacts& run : runs) {
            const int expected_rounds =
                config.iterations.value_or(grover_default_iterations(
                    std::uint64_t{1} << run.record.n));
            count_ok = count_ok && (run.record.iterations == expected_rounds);
            ledger_ok = ledger_ok && (run.record.ledger.quantum_queries ==
                                      static_cast<std::uint64_t>(run.record.iterations));
        }
        r.measured = std::string(count_ok ? "round counts match" : "round count mismatch") +
                     ", " + (ledger_ok ? "ledger equals rounds" : "ledger mismatch");
        r.expected = config.iterations.has_value()
                         ? "override honored; one quantum query per round"
                         : "floor(pi/4 sqrt(N)) rounds; one quantum query per round";
        r.pass = count_ok && ledger_ok;
        return true;
    });

    collect.add("grover-success-analytic", [&](ClaimReport& r) {
        double worst_dev = 0.0;
        bool close_to_one = true;
        for (const RunArtifacts& run : runs) {
            const std::uint64_t num_records = std::uint64_t{1} << run.record.n;
            const double analytic =
                grover_analytic_success(num_records, run.record.iterations);
            worst_dev =
                std::max(worst_dev, std::abs(run.record.success_probability - analytic));
            if (!config.iterations.has_value()) {
                close_to_one =
                    close_to_one &&
                    (run.record.success_probability >=
                     1.0 - 1.0 / static_cast<double>(num_records) - 1e-12);
            }
        }
        r.measured = "max |simulated - analytic| = " + format_double(worst_dev);
        r.expected = "within 1e-9 of sin^2((2k+1) asin(1/sqrt(N)))" +
                     std::string(config.iterations.has_value()
                                     ? ""
                                     : "; success >= 1 - 1/N at the default k");
        r.pass = (worst_dev < 1e-9) && close_to_one;
        return true;
    });

    collect.add("grover-initial-product", [&](ClaimReport& r) {
        bool hold = true;
        for (const RunArtifacts& run : runs) {
            hold = hold && run.entanglement->at("psi0").fully_product &&
                   run.entanglement->at("psi1").fully_product;
        }
        r.measured = std::string(hold ? "psi0 and psi1 fully product"
                                      : "a prepared snapshot is entangled") +
                     " in " + run_count;
        r.expected = "both prepared snapshots fully product";
        r.pass = hold;
        return true;
    });

    collect.add("grover-intermediate-entangled", [&](ClaimReport& r) {
        bool hold = true;
        std::size_t assessed = 0;
        for (const RunArtifacts& run : runs) {
            if (run.record.n == 1) {
                ++assessed;
                for (const SnapshotVerdicts& snap : run.entanglement->snapshots) {
                    hold = hold && snap.fully_product;
                }
                continue;
            }
            if (run.record.iterations == 0) {
                continue; // no post-psi1 snapshots to assess
            }
            ++assessed;
            bool some_entangled = false;
            for (const SnapshotVerdicts& snap : run.entanglement->snapshots) {
                if (snap.label == "psi0" || snap.label == "psi1") {
                    continue;
                }
                for (const CutVerdict& cut : snap.cuts) {
                    some_entangled = some_entangled || (cut.purity < 1.0 - 1e-6);
                }
            }
            hold = hold && some_entangled;
        }
        if (assessed == 0) {
            return false;
        }
        r.measured = std::string(hold ? "entanglement pattern as claimed"
                                      : "entanglement pattern violated") +
                     " in " + std::to_string(assessed) + " runs";
        r.expected = "n >= 2: some post-psi1 cut purity < 1 - 1e-6; n = 1: all "
                     "snapshots product";
        r.pass = hold;
        return true;
    });

    collect.add("grover-ancilla-product", [&](ClaimReport& r) {
        bool hold = true;
        double min_purity = 1.0;
        for (const RunArtifacts& run : runs) {
            const auto& series = run.entanglement->ancilla_series;
            for (std::size_t i = 1; i < series.size(); ++i) { // psi1 onward
                hold = hold && series[i].second.is_product;
                min_purity = std::min(min_purity, series[i].second.purity);
            }
        }
        r.measured = "min ancilla-cut purity from psi1 on = 1 - " +
                     format_double(1.0 - min_purity);
        r.expected = "ancilla cut product at every snapshot after preparation";
        r.pass = hold;
        return true;
    });

    collect.add("classical-naive-worst-case", [&](ClaimReport& r) {
        bool worst_case_exact = true;
        for (int n = config.n; n <= config.last_n(); ++n) {
            NaiveOracle adversary = NaiveOracle::adversarial(n);
            const ClassicalSearchResult found = classical_naive_search(adversary);
            const std::uint64_t num_records = std::uint64_t{1} << n;
            worst_case_exact = worst_case_exact && (found.queries == num_records - 1);
        }
        bool policy_ok = true;
        std::uint64_t max_queries = 0;
        for (const RunArtifacts& run : runs) {
            const std::uint64_t num_records = std::uint64_t{1} << run.record.n;
            policy_ok = policy_ok && (run.record.top_guess == run.record.answer) &&
                        (run.classical->queries <= num_records - 1);
            max_queries = std::max(max_queries, run.classical->queries);
        }
        r.measured = std::string(worst_case_exact ? "adversarial probe used N-1 queries"
                                                  : "adversarial count off") +
                     "; policy runs correct with <= " + std::to_string(max_queries) +
                     " queries";
        r.expected = "exactly N-1 adversarial queries; correct answer within N-1";
        r.pass = worst_case_exact && policy_ok;
        return true;
    });

    collect.add("classical-sophisticated-n-queries", [&](ClaimReport& r) {
        bool hold = true;
        for (const RunArtifacts& run : runs) {
            hold = hold &&
                   (run.classical->queries == static_cast<std::uint64_t>(run.record.n)) &&
                   (run.record.top_guess == run.record.answer);
        }
        r.measured = std::string(hold ? "n queries, answer recovered"
                                      : "query count or answer mismatch") +
                     " in " + run_count;
        r.expected = "exactly n queries and the exact answer";
        r.pass = hold;
        return true;
    });

    collect.add("qudit-distribution-equivalence", [&](ClaimReport& r) {
        double worst = 0.0;
        for (const RunArtifacts& run : runs) {
            worst = std::max(worst, run.qudit_max_deviation);
        }
        r.measured = "max per-outcome deviation = " + format_double(worst) + " over " +
                     run_count;
        r.expected = "within 1e-12 of the multi-qubit distribution";
        r.pass = worst <= 1e-12;
        return true;
    });

    collect.add("qudit-entanglement-not-applicable", [&](ClaimReport& r) {
        bool hold = true;
        for (const RunArtifacts& run : runs) {
            const std::string field = to_string(run.qudit->entanglement);
            hold = hold && (field == "not applicable") && (field != "product");
        }
        r.measured = hold ? "field reads 'not applicable' in every run"
                          : "unexpected entanglement field";
        r.expected = "'not applicable', never 'product'";
        r.pass = hold;
        return true;
    });

    collect.add("qudit-precision-scaling", [&](ClaimReport& r) {
        bool linear = true;
        bool reciprocal = true;
        bool monotone = true;
        for (std::size_t i = 0; i < precision.size(); ++i) {
            const PrecisionReport& p = precision[i];
            linear = linear && (std::abs(p.resolution_bits -
                                         p.detuning_exponent * p.n) <= 1e-9);
            reciprocal = reciprocal &&
                         (std::abs(p.required_resolution * p.min_level_spacing - 1.0) <=
                          1e-12);
            if (i > 0) {
                monotone = monotone &&
                           (p.required_resolution > precision[i - 1].required_resolution) &&
                           (p.resolution_bits > precision[i - 1].resolution_bits);
            }
        }
        r.measured = std::string(linear ? "bits = p*n" : "bits nonlinear") + "; " +
                     (reciprocal ? "resolution * spacing = 1" : "reciprocal broken") +
                     "; " + (monotone ? "strictly increasing" : "non-monotone");
        r.expected = "resolution_bits = p*n, resolution = 1/spacing, both increasing";
        r.pass = linear && reciprocal && monotone;
        return true;
    });

    collect.add("qudit-specification-gap", [&](ClaimReport& r) {
        double min_margin = std::numeric_limits<double>::infinity();
        std::size_t assessed = 0;
        for (const PrecisionReport& p : precision) {
            if (p.n < 4) {
                continue;
            }
            ++assessed;
            const double ratio = static_cast<double>(p.nontrivial_amplitude_count) /
                                 static_cast<double>(p.poly_local_gate_count);
            min_margin = std::min(min_margin,
                                  ratio / std::exp2(static_cast<double>(p.n)));
        }
        if (assessed == 0) {
            return false; // needs n >= 4 in the sweep
        }
        r.measured = "min census ratio / 2^n = " + format_double(min_margin) + " over " +
                     std::to_string(assessed) + " widths";
        r.expected = "ratio (2N^2 + N)/(2n + 2) above 2^n for n >= 4";
        r.pass = min_margin > 1.0;
        return true;
    });

    return claims;
}

} // namespace

bool ExperimentResult::all_claims_pass() const {
    for (const ClaimReport& claim : claims) {
        if (!claim.pass) {
            return false;
        }
    }
    return true;
}

int exit_code_for(const ExperimentResult& result) {
    return result.all_claims_pass() ? kExitPass : kExitClaimFailed;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate_config(config);
    std::mt19937_64 rng(config.seed);

    ExperimentResult result;
    std::vector<RunArtifacts> artifacts;

    for (int n = config.n; n <= config.last_n(); ++n) {
        for (std::uint64_t a : answers_for(config, n, rng)) {
            RunArtifacts art;
            art.record.n = n;
            art.record.answer = a;

            switch (config.algorithm) {
            case AlgorithmKind::grover: {
                NaiveOracle oracle = NaiveOracle::with_answer(n, a);
                SearchResult run = run_grover(n, oracle, config.iterations);
                art.record.top_guess = run.top_guess;
                art.record.success_probability = run.success_probability;
                art.record.ledger = run.ledger;
                art.record.reflections = run.reflections;
                art.record.iterations = run.iterations;
                art.record.top_guess_phase = run.top_guess_phase;
                art.record.sampled_outcome = sample_from_table(run.distribution, rng);
                art.entanglement = analyze_trajectory(run.trajectory, config.tolerances);
                result.series.emplace_back(run_key(n, a), *art.entanglement);
                art.qubit = std::move(run);
                break;
            }
            case AlgorithmKind::bv: {
                SophisticatedOracle oracle = SophisticatedOracle::with_answer(n, a);
                SearchResult run = run_bv(n, oracle);
                art.record.top_guess = run.top_guess;
                art.record.success_probability = run.success_probability;
                art.record.ledger = run.ledger;
                art.record.reflections = run.reflections;
                art.record.iterations = run.iterations;
                art.record.top_guess_phase = run.top_guess_phase;
                art.record.sampled_outcome = sample_from_table(run.distribution, rng);
                art.entanglement = analyze_trajectory(run.trajectory, config.tolerances);
                result.series.emplace_back(run_key(n, a), *art.entanglement);
                art.qubit = std::move(run);
                break;
            }
            case AlgorithmKind::classical_naive: {
                NaiveOracle oracle = NaiveOracle::with_answer(n, a);
                const ClassicalSearchResult found = classical_naive_search(oracle);
                art.classical = found;
                art.record.top_guess = found.answer;
                art.record.success_probability = (found.answer == a) ? 1.0 : 0.0;
                art.record.ledger = oracle.ledger();
                break;
            }
            case AlgorithmKind::classical_sophisticated: {
                SophisticatedOracle oracle = SophisticatedOracle::with_answer(n, a);
                const ClassicalSearchResult found = classical_sophisticated_search(oracle);
                art.classical = found;
                art.record.top_guess = found.answer;
                art.record.success_probability = (found.answer == a) ? 1.0 : 0.0;
                art.record.ledger = oracle.ledger();
                break;
            }
            case AlgorithmKind::qudit_grover: {
                NaiveOracle qubit_oracle = NaiveOracle::with_answer(n, a);
                SearchResult twin = run_grover(n, qubit_oracle, config.iterations);
                NaiveOracle qudit_oracle = NaiveOracle::with_answer(n, a);
                QuditSearchResult run =
                    run_grover_on_qudit(n, qudit_oracle, config.iterations);
                for (std::size_t i = 0; i < run.distribution.size(); ++i) {
                    art.qudit_max_deviation =
                        std::max(art.qudit_max_deviation,
                                 std::abs(run.distribution[i] - twin.distribution[i]));
                }
                art.record.top_guess = run.top_level;
                art.record.success_probability = run.success_probability;
                art.record.ledger = run.ledger;
                art.record.reflections = run.reflections;
                art.record.iterations = run.iterations;
                art.record.top_guess_phase = run.top_level_phase;
                art.record.sampled_outcome = sample_from_table(run.distribution, rng);
                art.qubit = std::move(twin);
                art.qudit = std::move(run);
                break;
            }
            case AlgorithmKind::qudit_bv: {
                SophisticatedOracle qubit_oracle = SophisticatedOracle::with_answer(n, a);
                SearchResult twin = run_bv(n, qubit_oracle);
                SophisticatedOracle qudit_oracle = SophisticatedOracle::with_answer(n, a);
                QuditSearchResult run = run_bv_on_qudit(n, qudit_oracle);
                for (std::size_t i = 0; i < run.distribution.size(); ++i) {
                    art.qudit_max_deviation =
                        std::max(art.qudit_max_deviation,
                                 std::abs(run.distribution[i] - twin.distribution[i]));
                }
                art.record.top_guess = run.top_level;
                art.record.success_probability = run.success_probability;
                art.record.ledger = run.ledger;
                art.record.reflections = run.reflections;
                art.record.iterations = run.iterations;
                art.record.top_guess_phase = run.top_level_phase;
                art.record.sampled_outcome = sample_from_table(run.distribution, rng);
                art.qubit = std::move(twin);
                art.qudit = std::move(run);
                break;
            }
            }

            result.runs.push_back(art.record);
            artifacts.push_back(std::move(art));
        }
    }

    if (is_qudit(config.algorithm)) {
        for (int n = config.n; n <= config.last_n(); ++n) {
            result.precision.push_back(precision_cost(n, config.detuning_exponent));
        }
    }

    result.claims = evaluate_claims(config, artifacts, result.precision);
    return result;
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

namespace {

ordered_json series_json(const EntanglementReport& report) {
    ordered_json doc;
    for (const SnapshotVerdicts& snap : report.snapshots) {
        ordered_json cuts;
        for (const CutVerdict& cut : snap.cuts) {
            cuts["q" + std::to_string(cut.cut.front())] = {
                {"purity", cut.purity},
                {"entropy_bits", cut.entropy_bits},
                {"schmidt_rank", cut.schmidt_rank},
                {"product", cut.is_product},
            };
        }
        doc[snap.label] = {{"fully_product", snap.fully_product}, {"cuts", cuts}};
    }
    return doc;
}

ordered_json claims_json(const std::vector<ClaimReport>& claims) {
    ordered_json arr = ordered_json::array();
    for (const ClaimReport& claim : claims) {
        arr.push_back({{"claim_id", claim.claim_id},
                       {"anchor", claim.anchor},
                       {"measured", claim.measured},
                       {"expected", claim.expected},
                       {"verdict", claim.pass ? "pass" : "fail"},
                       {"runtime_ms", claim.runtime_ms}});
    }
    return arr;
}

ordered_json report_document(const ExperimentConfig& config,
                             const ExperimentResult& result) {
    ordered_json doc;
    doc["meta"] = {{"artifact", "qsearchlab"},
                   {"version", kVersion},
                   {"schema_version", kReportSchemaVersion},
                   {"config", config_json(config)},
                   {"seed", config.seed}};
    doc["claims"] = claims_json(result.claims);

    if (!config.claims_only) {
        if (!result.series.empty()) {
            if (result.series.size() == 1) {
                doc["series"] = series_json(result.series.front().second);
            } else {
                ordered_json by_run;
                for (const auto& [key, report] : result.series) {
                    by_run[key] = series_json(report);
                }
                doc["series"] = by_run;
            }
        }
        ordered_json ledgers;
        for (const RunRecord& run : result.runs) {
            ledgers[run_key(run.n, run.answer)] = {
                {"classical_queries", run.ledger.classical_queries},
                {"quantum_queries", run.ledger.quantum_queries},
                {"reflections", run.reflections},
            };
        }
        doc["ledgers"] = ledgers;

        ordered_json runs = ordered_json::array();
        for (const RunRecord& run : result.runs) {
            ordered_json entry = {{"n", run.n},
                                  {"answer", run.answer},
                                  {"top_guess", run.top_guess},
                                  {"success_probability", run.success_probability},
                                  {"classical_queries", run.ledger.classical_queries},
                                  {"quantum_queries", run.ledger.quantum_queries},
                                  {"reflections", run.reflections},
                                  {"iterations", run.iterations},
                                  {"top_guess_phase", run.top_guess_phase}};
            if (run.sampled_outcome.has_value()) {
                entry["sampled_outcome"] = *run.sampled_outcome;
            }
            runs.push_back(entry);
        }
        doc["runs"] = runs;

        if (!result.precision.empty()) {
            ordered_json reports = ordered_json::array();
            for (const PrecisionReport& p : result.precision) {
                reports.push_back(
                    {{"n", p.n},
                     {"detuning_exponent", p.detuning_exponent},
                     {"min_level_spacing", p.min_level_spacing},
                     {"required_resolution", p.required_resolution},
                     {"resolution_bits", p.resolution_bits},
                     {"nontrivial_amplitude_count", p.nontrivial_amplitude_count},
                     {"poly_local_gate_count", p.poly_local_gate_count}});
            }
            doc["precision"] = reports;
        }
    }
    return doc;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

std::string render_json(const ExperimentConfig& config, const ExperimentResult& result) {
    ordered_json doc = report_document(config, result);

    // Content hash over the document with volatile timing fields zeroed and
    // the output destination dropped: it identifies the scientific content,
    // which does not depend on where the report lands.
    ordered_json hashed = doc;
    for (auto& claim : hashed["claims"]) {
        claim["runtime_ms"] = 0.0;
    }
    hashed["meta"]["config"].erase("output");
    doc["meta"]["content_hash"] = fnv1a_hex(hashed.dump());
    return doc.dump(2) + "\n";
}

std::string render_csv(const ExperimentResult& result) {
    std::string out = "claim_id,anchor,measured,expected,verdict,runtime_ms\n";
    for (const ClaimReport& claim : result.claims) {
        char runtime[32];
        std::snprintf(runtime, sizeof(runtime), "%.3f", claim.runtime_ms);
        out += csv_escape(claim.claim_id) + "," + csv_escape(claim.anchor) + "," +
               csv_escape(claim.measured) + "," + csv_escape(claim.expected) + "," +
               (claim.pass ? "pass" : "fail") + "," + runtime + "\n";
    }
    return out;
}

std::string render_text(const ExperimentConfig& config, const ExperimentResult& result) {
    std::ostringstream out;
    out << "qsearchlab " << kVersion << "  algorithm=" << to_string(config.algorithm)
        << "  n=" << config.n;
    if (config.last_n() != config.n) {
        out << ".." << config.last_n();
    }
    out << "  answers=" << to_string(config.answer.policy) << "  seed=" << config.seed
        << "\n\n";

    out << "claims (" << result.claims.size() << "):\n";
    std::size_t id_width = 8;
    for (const ClaimReport& claim : result.claims) {
        id_width = std::max(id_width, claim.claim_id.size());
    }
    for (const ClaimReport& claim : result.claims) {
        out << "  " << (claim.pass ? "PASS" : "FAIL") << "  " << claim.claim_id
            << std::string(id_width - claim.claim_id.size() + 2, ' ') << claim.measured
            << "  [expected: " << claim.expected << "]\n";
    }

    if (!config.claims_only) {
        out << "\nruns (" << result.runs.size() << "):\n";
        out << "  n   answer     top        p(answer)    cq     qq   refl  iter"
            << "  sampled\n";
        for (const RunRecord& run : result.runs) {
            char line[160];
            std::snprintf(line, sizeof(line),
                          "  %-3d %-10llu %-10llu %-12.6g %-6llu %-4llu %-5llu %-4d",
                          run.n, static_cast<unsigned long long>(run.answer),
                          static_cast<unsigned long long>(run.top_guess),
                          run.success_probability,
                          static_cast<unsigned long long>(run.ledger.classical_queries),
                          static_cast<unsigned long long>(run.ledger.quantum_queries),
                          static_cast<unsigned long long>(run.reflections),
                          run.iterations);
            out << line;
            if (run.sampled_outcome.has_value()) {
                out << "  " << *run.sampled_outcome;
            } else {
                out << "  -";
            }
            out << "\n";
        }

        if (!result.series.empty()) {
            out << "\nentanglement series (fully-product flags):\n";
            for (const auto& [key, report] : result.series) {
                out << "  " << key << ":";
                for (const SnapshotVerdicts& snap : report.snapshots) {
                    out << "  " << snap.label << "=" << (snap.fully_product ? "P" : "E");
                }
                out << "\n";
            }
        }

        if (!result.precision.empty()) {
            out << "\nprecision census (p = " << format_double(
                       result.precision.front().detuning_exponent)
                << "):\n";
            out << "  n   spacing        resolution     bits     monolithic  local\n";
            for (const PrecisionReport& p : result.precision) {
                char line[160];
                std::snprintf(line, sizeof(line),
                              "  %-3d %-14.6g %-14.6g %-8.6g %-11llu %llu\n", p.n,
                              p.min_level_spacing, p.required_resolution,
                              p.resolution_bits,
                              static_cast<unsigned long long>(p.nontrivial_amplitude_count),
                              static_cast<unsigned long long>(p.poly_local_gate_count));
                out << line;
            }
        }
    }
    out << "\n" << (result.all_claims_pass() ? "ALL CLAIMS PASS" : "SOME CLAIMS FAIL")
        << "\n";
    return out.str();
}

void emit_report(const ExperimentConfig& config, const ExperimentResult& result,
                 OutputFormat format, const std::string& path) {
    if (result.claims.empty()) {
        throw UsageError("no claims to report");
    }

    std::string rendered;
    switch (format) {
    case OutputFormat::json:
        rendered = render_json(config, result);
        break;
    case OutputFormat::csv:
        rendered = render_csv(result);
        break;
    case OutputFormat::text:
        rendered = render_text(config, result);
        break;
    }

    if (path.empty()) {
        std::cout << rendered;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    file << rendered;
    if (!file.good()) {
        throw UsageError("failed while writing '" + path + "'");
    }
}

} // namespace qsl
