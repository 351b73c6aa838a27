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

#ifndef QSEARCHLAB_STATE_HPP
#define QSEARCHLAB_STATE_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace qsl {

using Amplitude = std::complex<double>;

/// Tolerance for exact algebraic identities (norms, unitarity, distributions).
inline constexpr double kNormTol = 1e-12;
/// Tolerance for quantities that pass through an eigen-decomposition.
inline constexpr double kEigenTol = 1e-10;
/// Register width cap; 2^(kMaxQubits) amplitudes at 16 B each is ~1 GiB.
inline constexpr int kMaxQubits = 26;

/// Bit mask of qubit `target` inside a `num_qubits`-wide composite index.
/// Qubit 0 is the top wire and the most significant bit; the last qubit is
/// the least significant bit.
inline std::uint64_t qubit_mask(int num_qubits, int target) {
    return std::uint64_t{1} << (num_qubits - 1 - target);
}

/// Normalized amplitude vector over the computational basis of n qubits.
///
/// Basis convention: composite index i spells the qubit values top wire
/// first, so for a guess register x and response bit b the index is
/// i = (x << 1) | b.
class PureState {
  public:
    /// |index> on num_qubits qubits.
    static PureState basis(int num_qubits, std::uint64_t index);

    /// Wraps an amplitude vector; rejects wrong length, non-finite entries,
    /// and vectors whose squared norm deviates from 1 by more than kNormTol.
    static PureState from_amplitudes(int num_qubits, std::vector<Amplitude> amps);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }

    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    Amplitude amplitude(std::uint64_t index) const;

    /// |sum |c_i|^2 - 1|.
    double norm_error() const;

    /// Mutable access for gate kernels. Callers are responsible for applying
    /// norm-preserving maps only.
    std::vector<Amplitude>& mutable_amplitudes() { return amps_; }

  private:
    PureState(int num_qubits, std::vector<Amplitude> amps)
        : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    int num_qubits_;
    std::vector<Amplitude> amps_;
};

/// <a|b>; both states must have the same width.
Amplitude inner_product(const PureState& a, const PureState& b);

/// Exact Born distribution over the listed qubits, in the listed order
/// (first listed qubit = most significant bit of the outcome index).
/// Entries sum to 1 within kNormTol; no sampling is involved.
std::vector<double> measurement_distribution(const PureState& state,
                                             const std::vector<int>& subset);

/// Seeded draw from measurement_distribution. Demonstration output only;
/// every verdict in this library is computed from the exact distribution.
std::uint64_t sample_measurement(const PureState& state, const std::vector<int>& subset,
                                 std::mt19937_64& rng);

} // namespace qsl

#endif // QSEARCHLAB_STATE_HPP
