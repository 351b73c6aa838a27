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

#include "qsearchlab/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsearchlab/gates.hpp"

namespace qsl {

namespace {

std::vector<int> guess_register(int n) {
    std::vector<int> qubits(n);
    for (int q = 0; q < n; ++q) {
        qubits[q] = q;
    }
    return qubits;
}

std::uint64_t argmax(const std::vector<double>& table) {
    return static_cast<std::uint64_t>(
        std::max_element(table.begin(), table.end()) - table.begin());
}

// Prepares |0...0,0> -> (sum_x |x>) (|0> - |1>) / sqrt(2N): X then H on the
// response qubit, H layer on the guess register.
PureState prepare_query_superposition(int n, Trajectory& traj) {
    PureState state = PureState::basis(n + 1, 0);
    traj.snapshots.push_back({"psi0", state});

    apply_one_qubit_gate(state, gates::pauli_x(), n);
    apply_one_qubit_gate(state, gates::hadamard(), n);
    apply_hadamard_layer(state, guess_register(n));
    traj.snapshots.push_back({"psi1", state});
    return state;
}

double phase_at(const PureState& state, std::uint64_t guess) {
    // Final states here carry the response qubit in (|0> - |1>)/sqrt(2), so
    // the b=0 component is nonzero whenever the guess has weight.
    return std::arg(state.amplitude(guess << 1));
}

} // namespace

const PureState& Trajectory::state(const std::string& label) const {
    for (const Snapshot& snap : snapshots) {
        if (snap.label == label) {
            return snap.state;
        }
    }
    throw std::domain_error("no snapshot labeled '" + label + "'");
}

bool Trajectory::has(const std::string& label) const {
    for (const Snapshot& snap : snapshots) {
        if (snap.label == label) {
            return true;
        }
    }
    return false;
}

int grover_default_iterations(std::uint64_t num_records) {
    return static_cast<int>(std::floor(
        std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(num_records))));
}

SearchResult run_grover(int n, NaiveOracle& oracle, std::optional<int> iterations) {
    if (oracle.width() != n) {
        throw std::domain_error("oracle width does not match requested register");
    }
    const std::uint64_t num_records = std::uint64_t{1} << n;
    const int rounds = iterations.value_or(grover_default_iterations(num_records));
    if (rounds < 0) {
        throw std::domain_error("iteration count must be nonnegative");
    }

    SearchResult result;
    PureState state = prepare_query_superposition(n, result.trajectory);
    const std::vector<int> guesses = guess_register(n);

    for (int k = 1; k <= rounds; ++k) {
        oracle.apply(state);
        result.trajectory.snapshots.push_back(
            {"iter " + std::to_string(k) + " post-oracle", state});

        // Reflection about the uniform superposition: the f0 block conjugated
        // by the guess-register H layers, with the phase kicked back off the
        // response qubit. Global phase -1 per round; reported, not observable.
        apply_hadamard_layer(state, guesses);
        apply_zero_reflection(state);
        apply_hadamard_layer(state, guesses);
        ++result.reflections;
        result.trajectory.snapshots.push_back(
            {"iter " + std::to_string(k) + " post-diffusion", state});
    }

    result.iterations = rounds;
    result.distribution = measurement_distribution(state, guesses);
    result.top_guess = argmax(result.distribution);
    result.success_probability = oracle.answer_probability(result.distribution);
    result.ledger = oracle.ledger();
    result.top_guess_phase = phase_at(state, result.top_guess);
    return result;
}

double grover_analytic_success(std::uint64_t num_records, int iterations) {
    if (num_records < 2) {
        throw std::domain_error("need at least two records");
    }
    if (iterations < 0) {
        throw std::domain_error("iteration count must be nonnegative");
    }
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(num_records)));
    const double s = std::sin((2.0 * iterations + 1.0) * theta);
    return s * s;
}

SearchResult run_bv(int n, SophisticatedOracle& oracle) {
    if (oracle.width() != n) {
        throw std::domain_error("oracle width does not match requested register");
    }

    SearchResult result;
    PureState state = prepare_query_superposition(n, result.trajectory);

    oracle.apply(state);
    result.trajectory.snapshots.push_back({"psi2", state});

    const std::vector<int> guesses = guess_register(n);
    apply_hadamard_layer(state, guesses);
    result.trajectory.snapshots.push_back({"psi3", state});

    result.iterations = 0;
    result.distribution = measurement_distribution(state, guesses);
    result.top_guess = argmax(result.distribution);
    result.success_probability = oracle.answer_probability(result.distribution);
    result.ledger = oracle.ledger();
    result.top_guess_phase = phase_at(state, result.top_guess);
    return result;
}

ClassicalSearchResult classical_naive_search(NaiveOracle& oracle) {
    const std::uint64_t num_records = oracle.num_records();
    std::uint64_t queries = 0;
    for (std::uint64_t x = 0; x + 1 < num_records; ++x) {
        ++queries;
        if (oracle.classical_query(x, 0) == 1) {
            return {x, queries};
        }
    }
    // N-1 distinct misses: the last record is the answer, no query needed.
    return {num_records - 1, queries};
}

ClassicalSearchResult classical_sophisticated_search(SophisticatedOracle& oracle) {
    const int n = oracle.width();
    std::uint64_t answer = 0;
    std::uint64_t queries = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t unit = std::uint64_t{1} << (n - 1 - i);
        ++queries;
        if (oracle.classical_query(unit, 0) == 1) {
            answer |= unit;
        }
    }
    return {answer, queries};
}

} // namespace qsl
