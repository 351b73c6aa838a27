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

#ifndef QSEARCHLAB_ORACLES_HPP
#define QSEARCHLAB_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "qsearchlab/state.hpp"

namespace qsl {

class QuditState;

/// Read-only snapshot of an oracle's query counters.
struct QueryLedger {
    std::uint64_t classical_queries = 0;
    std::uint64_t quantum_queries = 0;

    std::uint64_t total() const { return classical_queries + quantum_queries; }
    bool operator==(const QueryLedger&) const = default;
};

/// Defined by the test harness only; the hidden answer is not reachable from
/// algorithm code.
struct OracleTestAccess;

/// Membership-test database: f(x) = 1 iff x equals the hidden answer.
///
/// The answer is sealed at construction; callers hold only the handle and a
/// query counter. Each classical or quantum query increments the ledger by
/// exactly one, regardless of superposition width.
class NaiveOracle {
  public:
    /// N = 2^n records, hidden answer `a` in [0, N).
    static NaiveOracle with_answer(int n, std::uint64_t answer);

    /// Worst-case mode: the answer is deferred to the last never-queried
    /// record. Classical queries only.
    static NaiveOracle adversarial(int n);

    int width() const { return n_; }
    std::uint64_t num_records() const { return std::uint64_t{1} << n_; }
    bool is_adversarial() const { return adversarial_; }

    /// (x, b) -> b xor f(x). Counts one classical query.
    int classical_query(std::uint64_t x, int b);

    /// The f-controlled-NOT on n+1 qubits: |x,b> -> |x, b xor f(x)>.
    /// Swaps the amplitude pair at the answer row; counts one quantum query.
    void apply(PureState& state);

    /// Diagonal phase image on the factored 2^n-level register:
    /// amplitude at the answer level is negated. Counts one quantum query.
    void apply_phase(QuditState& state);

    QueryLedger ledger() const { return ledger_; }

    /// Harness bookkeeping: probability the distribution assigns to the
    /// sealed answer. Not a database query; the ledger is untouched.
    double answer_probability(const std::vector<double>& guess_distribution) const;

  private:
    NaiveOracle(int n, std::uint64_t answer, bool adversarial);

    void require_fixed_answer(const char* op) const;

    friend OracleTestAccess;

    int n_;
    std::uint64_t answer_;
    bool adversarial_;
    bool answer_fixed_;
    std::uint64_t distinct_misses_ = 0;
    std::vector<bool> queried_; // adversarial mode only
    QueryLedger ledger_;
};

/// Inner-product database: g(x) = x . a over n-bit strings, mod 2.
class SophisticatedOracle {
  public:
    static SophisticatedOracle with_answer(int n, std::uint64_t answer);

    int width() const { return n_; }
    std::uint64_t num_records() const { return std::uint64_t{1} << n_; }

    /// (x, b) -> b xor (x . a). Counts one classical query.
    int classical_query(std::uint64_t x, int b);

    /// The g-controlled-NOT on n+1 qubits: swaps the amplitude pair of every
    /// x with x . a = 1. Counts one quantum query.
    void apply(PureState& state);

    /// Diagonal phase image (-1)^(x . a) on the 2^n-level register.
    /// Counts one quantum query.
    void apply_phase(QuditState& state);

    QueryLedger ledger() const { return ledger_; }

    double answer_probability(const std::vector<double>& guess_distribution) const;

  private:
    SophisticatedOracle(int n, std::uint64_t answer);

    friend OracleTestAccess;

    int n_;
    std::uint64_t answer_;
    QueryLedger ledger_;
};

/// The reflection block's f0-controlled-NOT: swaps the amplitudes of
/// |0...0,0> and |0...0,1>. The record 0 is public, so this is not a
/// database query and no ledger is touched.
void apply_zero_reflection(PureState& state);

} // namespace qsl

#endif // QSEARCHLAB_ORACLES_HPP
