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

#ifndef QSEARCHLAB_ALGORITHMS_HPP
#define QSEARCHLAB_ALGORITHMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsearchlab/oracles.hpp"
#include "qsearchlab/state.hpp"

namespace qsl {

/// Labeled state snapshots in execution order; labels are unique.
struct Snapshot {
    std::string label;
    PureState state;
};

struct Trajectory {
    std::vector<Snapshot> snapshots;

    const PureState& state(const std::string& label) const;
    bool has(const std::string& label) const;
};

/// Outcome of one circuit run. `success_probability` is the probability the
/// exact output distribution assigns to the sealed answer, reported by the
/// oracle's bookkeeping; the test harness verifies it by unsealing.
struct SearchResult {
    std::vector<double> distribution; // over the 2^n guesses
    std::uint64_t top_guess = 0;
    double success_probability = 0.0;
    QueryLedger ledger;
    Trajectory trajectory;

    int iterations = 0;              // executed reflection rounds (0 when n/a)
    std::uint64_t reflections = 0;   // f0 reflections, ledgered apart from queries
    double top_guess_phase = 0.0;    // arg of the final amplitude at the top guess
};

/// floor(pi/4 * sqrt(N)).
int grover_default_iterations(std::uint64_t num_records);

/// The membership-oracle search circuit: prepare the response qubit with
/// X then H, spread the guess register with an H layer, then repeat
/// (oracle, H layer, zero reflection, H layer) `iterations` times and read
/// the exact distribution of the top n qubits.
///
/// Snapshots: "psi0", "psi1", then "iter k post-oracle" /
/// "iter k post-diffusion" per round. Consumes exactly `iterations`
/// quantum queries; defaults to grover_default_iterations(2^n).
SearchResult run_grover(int n, NaiveOracle& oracle,
                        std::optional<int> iterations = std::nullopt);

/// Closed-form success probability sin^2((2k+1) asin(1/sqrt(N))) after k
/// rounds. Verification oracle only; never used inside run_grover.
double grover_analytic_success(std::uint64_t num_records, int iterations);

/// The inner-product-oracle circuit: same preparation, one quantum query,
/// then an H layer on the guess register. The output distribution is a point
/// mass on the hidden answer. Snapshots: exactly "psi0".."psi3".
SearchResult run_bv(int n, SophisticatedOracle& oracle);

struct ClassicalSearchResult {
    std::uint64_t answer = 0;
    std::uint64_t queries = 0;
};

/// Probes records 0, 1, 2, ... with b = 0; after N-1 distinct misses the
/// remaining record is returned without querying it. At most N-1 queries,
/// with equality against an adversarial oracle.
ClassicalSearchResult classical_naive_search(NaiveOracle& oracle);

/// Queries the n unit bit strings; response i is bit i of the answer.
/// Exactly n queries.
ClassicalSearchResult classical_sophisticated_search(SophisticatedOracle& oracle);

} // namespace qsl

#endif // QSEARCHLAB_ALGORITHMS_HPP
