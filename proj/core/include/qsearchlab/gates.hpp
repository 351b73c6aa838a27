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

#ifndef QSEARCHLAB_GATES_HPP
#define QSEARCHLAB_GATES_HPP

#include <random>
#include <vector>

#include "qsearchlab/state.hpp"

namespace qsl {

/// 2x2 single-qubit gate. Application requires unitarity within kNormTol.
struct Gate2 {
    Amplitude m00, m01;
    Amplitude m10, m11;

    Gate2 adjoint() const;
    /// max-entry deviation of G†G from the identity.
    double unitarity_error() const;
    bool is_unitary(double tol = kNormTol) const { return unitarity_error() <= tol; }
};

namespace gates {

Gate2 identity();
Gate2 hadamard();
Gate2 pauli_x();

/// Haar-random single-qubit unitary (Gram-Schmidt on a Gaussian matrix).
Gate2 random_unitary(std::mt19937_64& rng);

} // namespace gates

/// Applies `gate` to the target tensor factor, in place. Strided kernel over
/// amplitude pairs; O(2^n), no matrix-vector product.
void apply_one_qubit_gate(PureState& state, const Gate2& gate, int target);

/// H on each listed qubit (targets distinct, in range). An empty target set
/// is the identity.
void apply_hadamard_layer(PureState& state, const std::vector<int>& targets);

} // namespace qsl

#endif // QSEARCHLAB_GATES_HPP
