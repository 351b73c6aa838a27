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

#ifndef QSEARCHLAB_EXPERIMENT_HPP
#define QSEARCHLAB_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsearchlab/entanglement.hpp"
#include "qsearchlab/oracles.hpp"
#include "qsearchlab/qudit.hpp"

namespace qsl {

/// Invalid configuration or unusable output destination. Runners map this to
/// exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class AlgorithmKind {
    grover,
    bv,
    classical_naive,
    classical_sophisticated,
    qudit_grover,
    qudit_bv,
};

enum class AnswerPolicy { random, fixed, exhaustive };

enum class OutputFormat { json, csv, text };

std::string to_string(AlgorithmKind kind);
std::string to_string(AnswerPolicy policy);
std::string to_string(OutputFormat format);
AlgorithmKind algorithm_from_string(const std::string& text); // throws UsageError
OutputFormat format_from_string(const std::string& text);     // throws UsageError

struct AnswerSpec {
    AnswerPolicy policy = AnswerPolicy::random;
    std::uint64_t fixed_value = 0; // used by AnswerPolicy::fixed only
    bool operator==(const AnswerSpec&) const = default;
};

/// Exhaustive answer sweeps are capped to keep 2^n enumeration sane.
inline constexpr int kMaxExhaustiveWidth = 12;

struct ExperimentConfig {
    AlgorithmKind algorithm = AlgorithmKind::bv;
    int n = 3;
    int n_max = 0; // 0 means "same as n"
    AnswerSpec answer;
    std::uint64_t seed = 0;
    std::optional<int> iterations; // override of the default round count
    Tolerances tolerances;
    double detuning_exponent = 3.0;
    std::string out_path;          // empty = stdout
    OutputFormat format = OutputFormat::text;
    bool claims_only = false;

    int last_n() const { return n_max == 0 ? n : n_max; }
    bool operator==(const ExperimentConfig&) const = default;
};

/// Lossless JSON round trip for configs; parse throws UsageError on
/// malformed or out-of-range input.
ExperimentConfig parse_config_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& config);

/// Throws UsageError for inconsistent settings (width caps, exhaustive
/// guard, fixed answer out of range, ...).
void validate_config(const ExperimentConfig& config);

/// One checked statement, bound by id to an anchor string from the claims
/// registry (docs/claims.json).
struct ClaimReport {
    std::string claim_id;
    std::string anchor;
    std::string measured;
    std::string expected;
    bool pass = false;
    double runtime_ms = 0.0;
};

/// An entry of the machine-readable claims registry.
struct ClaimSpec {
    std::string id;
    std::string anchor;
    std::string description;
    std::vector<std::string> applies_to; // algorithm names
};

/// Registry content embedded at build time from docs/claims.json.
const std::string& claims_registry_json();
const std::vector<ClaimSpec>& claims_registry();

struct RunRecord {
    int n = 0;
    std::uint64_t answer = 0;      // chosen by the harness, so known to it
    std::uint64_t top_guess = 0;
    double success_probability = 0.0;
    QueryLedger ledger;
    std::uint64_t reflections = 0;
    int iterations = 0;
    double top_guess_phase = 0.0;
    std::optional<std::uint64_t> sampled_outcome; // demo draw, quantum runs only
};

struct ExperimentResult {
    std::vector<ClaimReport> claims;
    std::vector<RunRecord> runs;
    /// (run key, report); run key is "n=<n> a=<answer>".
    std::vector<std::pair<std::string, EntanglementReport>> series;
    std::vector<PrecisionReport> precision; // qudit algorithms only

    bool all_claims_pass() const;
};

/// Deterministic given (config, seed). Throws WitnessDisagreement on
/// internal witness conflicts and UsageError on bad configs.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Exit-code contract: 0 all claims pass, 1 some claim fails, 2 usage error,
/// 3 internal witness disagreement.
enum ExitCode : int {
    kExitPass = 0,
    kExitClaimFailed = 1,
    kExitUsage = 2,
    kExitWitnessDisagreement = 3,
};

int exit_code_for(const ExperimentResult& result);

/// Full versioned JSON document: meta (version, config, seed, content hash),
/// claims, series, ledgers, runs. Byte-identical across runs with the same
/// (config, seed) except for runtime_ms fields; the content hash is computed
/// with those fields zeroed.
std::string render_json(const ExperimentConfig& config, const ExperimentResult& result);

/// Claims only; fixed column order
/// claim_id,anchor,measured,expected,verdict,runtime_ms.
std::string render_csv(const ExperimentResult& result);

/// Aligned human-readable tables.
std::string render_text(const ExperimentConfig& config, const ExperimentResult& result);

/// Renders in `format` and writes to `path` (or stdout when empty). Empty
/// claim lists and unwritable paths raise UsageError.
void emit_report(const ExperimentConfig& config, const ExperimentResult& result,
                 OutputFormat format, const std::string& path);

} // namespace qsl

#endif // QSEARCHLAB_EXPERIMENT_HPP
