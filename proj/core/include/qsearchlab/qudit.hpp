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

#ifndef QSEARCHLAB_QUDIT_HPP
#define QSEARCHLAB_QUDIT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qsearchlab/oracles.hpp"
#include "qsearchlab/state.hpp"

namespace qsl {

/// State of a single d-level system. There is deliberately no tensor
/// structure: the API exposes level indices only, so no qubit-cut question
/// can even be asked of it.
class QuditState {
  public:
    static QuditState basis(std::uint64_t dim, std::uint64_t level);
    static QuditState from_amplitudes(std::vector<Amplitude> amps);

    std::uint64_t dim() const { return static_cast<std::uint64_t>(amps_.size()); }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    Amplitude amplitude(std::uint64_t level) const;
    double norm_error() const;

    std::vector<Amplitude>& mutable_amplitudes() { return amps_; }

  private:
    explicit QuditState(std::vector<Amplitude> amps) : amps_(std::move(amps)) {}

    std::vector<Amplitude> amps_;
};

/// Splits off the (always-product) response qubit and returns the guess
/// register's pure state. Throws std::domain_error when the last qubit is
/// entangled with the rest (cannot factor). The ancilla factor's phase is
/// fixed so its largest component is real positive.
PureState factor_out_ancilla(const PureState& state, double tol = kEigenTol);

/// The fixed isomorphism: level i carries the amplitude of basis string
/// x = i (top wire = most significant bit). Level distributions equal the
/// register's measurement distribution exactly.
QuditState embed_as_qudit(const PureState& register_state);

std::vector<double> level_distribution(const QuditState& state);

/// The d x d image of the guess-register H layer, applied as one dense
/// transform (entries +/- 1/sqrt(d), generated row by row; nothing is
/// factored into local gates).
void apply_walsh_layer(QuditState& state);

/// Phase flip of level 0; the single-particle image of the f0 reflection.
void apply_zero_reflection(QuditState& state);

/// A qudit run has no tensor structure, so "is it entangled?" has no answer:
/// the report value is distinct from every multi-particle verdict and in
/// particular is never "product".
enum class QuditEntanglementField { not_applicable };

const char* to_string(QuditEntanglementField field);

struct QuditSearchResult {
    std::vector<double> distribution; // over the d levels
    std::uint64_t top_level = 0;
    double success_probability = 0.0;
    QueryLedger ledger;
    std::uint64_t reflections = 0;
    int iterations = 0;
    double top_level_phase = 0.0;
    QuditEntanglementField entanglement = QuditEntanglementField::not_applicable;
};

/// The same search circuits run on a single 2^n-level system. Oracles act as
/// diagonal phase transforms; the H layers act as dense Walsh transforms.
/// Output distributions agree with the multi-qubit runs within kNormTol.
QuditSearchResult run_grover_on_qudit(int n, NaiveOracle& oracle,
                                      std::optional<int> iterations = std::nullopt);
QuditSearchResult run_bv_on_qudit(int n, SophisticatedOracle& oracle);

/// Physical-resource figures for the single-particle encoding, in units
/// where the n=1 level spacing is 1.
struct PrecisionReport {
    int n = 0;
    double detuning_exponent = 0.0;    // p: spacing shrinks as N^-p
    double min_level_spacing = 0.0;    // N^-p
    double required_resolution = 0.0;  // 1 / min_level_spacing = 2^(p n)
    double resolution_bits = 0.0;      // p * n, exactly linear in n
    std::uint64_t nontrivial_amplitude_count = 0; // monolithic circuit entries
    std::uint64_t poly_local_gate_count = 0;      // constant-size gates, qubit circuit
};

/// Resolution and specification cost of running the single-query circuit on
/// one 2^n-level particle versus on n+1 qubits. The monolithic census counts
/// the nonzero entries of the two dense Walsh layers plus the oracle
/// diagonal (2 N^2 + N); the qubit circuit needs 2n + 2 constant-size gates.
PrecisionReport precision_cost(int n, double detuning_exponent);

/// Census formulas, exposed for direct cross-checks.
std::uint64_t monolithic_nontrivial_entries(int n); // 2 N^2 + N
std::uint64_t local_gate_count(int n);              // 2 n + 2

} // namespace qsl

#endif // QSEARCHLAB_QUDIT_HPP
