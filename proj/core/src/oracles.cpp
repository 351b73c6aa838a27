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

#include "qsearchlab/oracles.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

#include "qsearchlab/qudit.hpp"

namespace qsl {

namespace {

void check_oracle_width(int n) {
    if (n < 1 || n + 1 > kMaxQubits) {
        throw std::domain_error("oracle width must be in [1, " +
                                std::to_string(kMaxQubits - 1) + "], got " +
                                std::to_string(n));
    }
}

void check_record(std::uint64_t x, std::uint64_t num_records) {
    if (x >= num_records) {
        throw std::domain_error("record index " + std::to_string(x) +
                                " out of range for " + std::to_string(num_records) +
                                " records");
    }
}

void check_bit(int b) {
    if (b != 0 && b != 1) {
        throw std::domain_error("response bit must be 0 or 1");
    }
}

void check_register_width(int n, const PureState& state) {
    if (state.num_qubits() != n + 1) {
        throw std::domain_error("oracle of width " + std::to_string(n) +
                                " applied to a " + std::to_string(state.num_qubits()) +
                                "-qubit register (need n+1)");
    }
}

void check_level_width(int n, const QuditState& state) {
    if (state.dim() != (std::uint64_t{1} << n)) {
        throw std::domain_error("oracle of width " + std::to_string(n) +
                                " applied to a " + std::to_string(state.dim()) +
                                "-level system");
    }
}

int dot_mod2(std::uint64_t x, std::uint64_t a) {
    return static_cast<int>(std::popcount(x & a) & 1u);
}

} // namespace

NaiveOracle::NaiveOracle(int n, std::uint64_t answer, bool adversarial)
    : n_(n), answer_(answer), adversarial_(adversarial), answer_fixed_(!adversarial) {
    if (adversarial_) {
        queried_.assign(num_records(), false);
    }
}

NaiveOracle NaiveOracle::with_answer(int n, std::uint64_t answer) {
    check_oracle_width(n);
    if (answer >= (std::uint64_t{1} << n)) {
        throw std::domain_error("hidden answer out of range");
    }
    return NaiveOracle(n, answer, false);
}

NaiveOracle NaiveOracle::adversarial(int n) {
    check_oracle_width(n);
    return NaiveOracle(n, 0, true);
}

void NaiveOracle::require_fixed_answer(const char* op) const {
    if (!answer_fixed_) {
        throw std::domain_error(std::string(op) +
                                " is unavailable on an adversarial oracle whose "
                                "answer is still deferred");
    }
}

int NaiveOracle::classical_query(std::uint64_t x, int b) {
    check_record(x, num_records());
    check_bit(b);
    ++ledger_.classical_queries;

    if (adversarial_ && !answer_fixed_) {
        if (!queried_[x]) {
            queried_[x] = true;
            ++distinct_misses_;
            if (distinct_misses_ == num_records() - 1) {
                // Only one record was never queried; the answer is now forced.
                for (std::uint64_t r = 0; r < num_records(); ++r) {
                    if (!queried_[r]) {
                        answer_ = r;
                        break;
                    }
                }
                answer_fixed_ = true;
            }
        }
        return b; // consistent miss
    }
    return b ^ (x == answer_ ? 1 : 0);
}

void NaiveOracle::apply(PureState& state) {
    if (adversarial_) {
        throw std::domain_error("adversarial oracle supports classical queries only");
    }
    check_register_width(n_, state);
    ++ledger_.quantum_queries;

    auto& amps = state.mutable_amplitudes();
    std::swap(amps[(answer_ << 1) | 0], amps[(answer_ << 1) | 1]);
}

void NaiveOracle::apply_phase(QuditState& state) {
    if (adversarial_) {
        throw std::domain_error("adversarial oracle supports classical queries only");
    }
    check_level_width(n_, state);
    ++ledger_.quantum_queries;
    state.mutable_amplitudes()[answer_] *= -1.0;
}

double NaiveOracle::answer_probability(const std::vector<double>& guess_distribution) const {
    require_fixed_answer("answer_probability");
    if (guess_distribution.size() != num_records()) {
        throw std::domain_error("distribution length does not match record count");
    }
    return guess_distribution[answer_];
}

SophisticatedOracle::SophisticatedOracle(int n, std::uint64_t answer)
    : n_(n), answer_(answer) {}

SophisticatedOracle SophisticatedOracle::with_answer(int n, std::uint64_t answer) {
    check_oracle_width(n);
    if (answer >= (std::uint64_t{1} << n)) {
        throw std::domain_error("hidden answer out of range");
    }
    return SophisticatedOracle(n, answer);
}

int SophisticatedOracle::classical_query(std::uint64_t x, int b) {
    check_record(x, num_records());
    check_bit(b);
    ++ledger_.classical_queries;
    return b ^ dot_mod2(x, answer_);
}

void SophisticatedOracle::apply(PureState& state) {
    check_register_width(n_, state);
    ++ledger_.quantum_queries;

    auto& amps = state.mutable_amplitudes();
    for (std::uint64_t x = 0; x < num_records(); ++x) {
        if (dot_mod2(x, answer_)) {
            std::swap(amps[(x << 1) | 0], amps[(x << 1) | 1]);
        }
    }
}

void SophisticatedOracle::apply_phase(QuditState& state) {
    check_level_width(n_, state);
    ++ledger_.quantum_queries;

    auto& amps = state.mutable_amplitudes();
    for (std::uint64_t x = 0; x < num_records(); ++x) {
        if (dot_mod2(x, answer_)) {
            amps[x] *= -1.0;
        }
    }
}

double SophisticatedOracle::answer_probability(
    const std::vector<double>& guess_distribution) const {
    if (guess_distribution.size() != num_records()) {
        throw std::domain_error("distribution length does not match record count");
    }
    return guess_distribution[answer_];
}

void apply_zero_reflection(PureState& state) {
    if (state.num_qubits() < 2) {
        throw std::domain_error("zero reflection needs a guess register plus ancilla");
    }
    auto& amps = state.mutable_amplitudes();
    std::swap(amps[0], amps[1]);
}

} // namespace qsl
