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

#include "qsearchlab/entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qsearchlab/density.hpp"

namespace qsl {

namespace {

double entropy_bits_of(const std::vector<double>& eigenvalues) {
    double entropy = 0.0;
    for (double lambda : eigenvalues) {
        if (lambda > 1e-300) {
            entropy -= lambda * std::log2(lambda);
        }
    }
    return std::max(entropy, 0.0);
}

CutVerdict verdict_for_qubit(const PureState& state, int qubit, const Tolerances& tol) {
    const DensityMatrix rho = partial_trace(state, {qubit});
    const double cut_purity = purity(rho);
    const std::vector<double> eigs = rho.eigenvalues();

    // Rank threshold sits below the purity tolerance so the two witnesses
    // flip at comparable scales.
    const double rank_tol = tol.purity / 2.0;
    int rank = 0;
    for (double lambda : eigs) {
        if (lambda > rank_tol) {
            ++rank;
        }
    }

    const double entropy = entropy_bits_of(eigs);

    CutVerdict verdict;
    verdict.cut = {qubit};
    verdict.purity = cut_purity;
    verdict.schmidt_rank = rank;
    verdict.entropy_bits = entropy;
    verdict.is_product = cut_purity >= 1.0 - tol.purity;

    const bool rank_says_product = (rank == 1);
    const bool entropy_says_product = (entropy <= tol.entropy_bits);
    if (rank_says_product != verdict.is_product ||
        entropy_says_product != verdict.is_product) {
        throw WitnessDisagreement(
            "cut {q" + std::to_string(qubit) + "}: purity " + std::to_string(cut_purity) +
            ", Schmidt rank " + std::to_string(rank) + ", entropy " +
            std::to_string(entropy) + " bits do not agree on the product verdict");
    }
    return verdict;
}

} // namespace

std::vector<CutVerdict> analyze_state(const PureState& state, const Tolerances& tol) {
    if (state.num_qubits() < 2) {
        throw std::domain_error("entanglement analysis needs at least two qubits");
    }
    std::vector<CutVerdict> verdicts;
    verdicts.reserve(state.num_qubits());
    for (int q = 0; q < state.num_qubits(); ++q) {
        verdicts.push_back(verdict_for_qubit(state, q, tol));
    }
    return verdicts;
}

const SnapshotVerdicts& EntanglementReport::at(const std::string& label) const {
    for (const SnapshotVerdicts& snap : snapshots) {
        if (snap.label == label) {
            return snap;
        }
    }
    throw std::domain_error("no verdicts for snapshot '" + label + "'");
}

EntanglementReport analyze_trajectory(const Trajectory& trajectory, const Tolerances& tol) {
    if (trajectory.snapshots.empty()) {
        throw std::domain_error("empty trajectory");
    }
    const int width = trajectory.snapshots.front().state.num_qubits();

    EntanglementReport report;
    for (const Snapshot& snap : trajectory.snapshots) {
        if (snap.state.num_qubits() != width) {
            throw std::domain_error("trajectory snapshots differ in width");
        }
        SnapshotVerdicts entry;
        entry.label = snap.label;
        entry.cuts = analyze_state(snap.state, tol);
        entry.fully_product = true;
        for (const CutVerdict& cut : entry.cuts) {
            entry.fully_product = entry.fully_product && cut.is_product;
        }
        report.ancilla_series.emplace_back(snap.label, entry.cuts.back());
        report.snapshots.push_back(std::move(entry));
    }
    return report;
}

bool local_unitary_invariance_check(const PureState& state,
                                    const std::vector<Gate2>& local_gates,
                                    double tol) {
    if (local_gates.size() != static_cast<std::size_t>(state.num_qubits())) {
        throw std::domain_error("need exactly one local gate per qubit");
    }
    for (const Gate2& gate : local_gates) {
        if (!gate.is_unitary()) {
            throw std::invalid_argument("local gate is not unitary");
        }
    }

    std::vector<double> before(state.num_qubits());
    for (int q = 0; q < state.num_qubits(); ++q) {
        before[q] = purity(partial_trace(state, {q}));
    }

    PureState rotated = state;
    for (int q = 0; q < state.num_qubits(); ++q) {
        apply_one_qubit_gate(rotated, local_gates[q], q);
    }

    for (int q = 0; q < state.num_qubits(); ++q) {
        const double after = purity(partial_trace(rotated, {q}));
        if (std::abs(after - before[q]) > tol) {
            return false;
        }
    }
    return true;
}

} // namespace qsl
