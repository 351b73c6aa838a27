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

#include "qsearchlab/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsl {

namespace {

void check_width(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::domain_error("register width must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(num_qubits));
    }
}

void check_subset(int num_qubits, const std::vector<int>& subset) {
    std::uint64_t seen = 0;
    for (int q : subset) {
        if (q < 0 || q >= num_qubits) {
            throw std::domain_error("qubit index " + std::to_string(q) +
                                    " out of range for " + std::to_string(num_qubits) +
                                    " qubits");
        }
        const std::uint64_t bit = std::uint64_t{1} << q;
        if (seen & bit) {
            throw std::domain_error("duplicate qubit index " + std::to_string(q));
        }
        seen |= bit;
    }
}

} // namespace

PureState PureState::basis(int num_qubits, std::uint64_t index) {
    check_width(num_qubits);
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (index >= dim) {
        throw std::domain_error("basis index " + std::to_string(index) +
                                " out of range for dimension " + std::to_string(dim));
    }
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    amps[index] = Amplitude{1.0, 0.0};
    return PureState(num_qubits, std::move(amps));
}

PureState PureState::from_amplitudes(int num_qubits, std::vector<Amplitude> amps) {
    check_width(num_qubits);
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (amps.size() != dim) {
        throw std::domain_error("amplitude vector has length " +
                                std::to_string(amps.size()) + ", expected " +
                                std::to_string(dim));
    }
    double norm2 = 0.0;
    for (const Amplitude& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::domain_error("non-finite amplitude");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kNormTol) {
        throw std::domain_error("amplitude vector is not normalized: |norm^2 - 1| = " +
                                std::to_string(std::abs(norm2 - 1.0)));
    }
    return PureState(num_qubits, std::move(amps));
}

Amplitude PureState::amplitude(std::uint64_t index) const {
    if (index >= amps_.size()) {
        throw std::domain_error("amplitude index out of range");
    }
    return amps_[index];
}

double PureState::norm_error() const {
    double norm2 = 0.0;
    for (const Amplitude& a : amps_) {
        norm2 += std::norm(a);
    }
    return std::abs(norm2 - 1.0);
}

Amplitude inner_product(const PureState& a, const PureState& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::domain_error("inner product of states with different widths");
    }
    Amplitude acc{0.0, 0.0};
    const auto& av = a.amplitudes();
    const auto& bv = b.amplitudes();
    for (std::size_t i = 0; i < av.size(); ++i) {
        acc += std::conj(av[i]) * bv[i];
    }
    return acc;
}

std::vector<double> measurement_distribution(const PureState& state,
                                             const std::vector<int>& subset) {
    check_subset(state.num_qubits(), subset);
    const int k = static_cast<int>(subset.size());
    std::vector<double> table(std::uint64_t{1} << k, 0.0);

    // Outcome bit for subset[j] sits at position k-1-j; composite bit for
    // qubit q sits at position num_qubits-1-q.
    std::vector<std::pair<std::uint64_t, int>> masks(subset.size());
    for (int j = 0; j < k; ++j) {
        masks[j] = {qubit_mask(state.num_qubits(), subset[j]), k - 1 - j};
    }

    const auto& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        std::uint64_t outcome = 0;
        for (const auto& [mask, shift] : masks) {
            if (i & mask) {
                outcome |= std::uint64_t{1} << shift;
            }
        }
        table[outcome] += std::norm(amps[i]);
    }
    return table;
}

std::uint64_t sample_measurement(const PureState& state, const std::vector<int>& subset,
                                 std::mt19937_64& rng) {
    const std::vector<double> table = measurement_distribution(state, subset);
    // 53-bit uniform draw in [0, 1).
    const double u =
        static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
    double cumulative = 0.0;
    for (std::uint64_t outcome = 0; outcome < table.size(); ++outcome) {
        cumulative += table[outcome];
        if (u < cumulative) {
            return outcome;
        }
    }
    return static_cast<std::uint64_t>(table.size()) - 1;
}

} // namespace qsl
