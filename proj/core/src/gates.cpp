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

#include "qsearchlab/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsl {

Gate2 Gate2::adjoint() const {
    return Gate2{std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

double Gate2::unitarity_error() const {
    // G†G entries.
    const Amplitude e00 = std::conj(m00) * m00 + std::conj(m10) * m10;
    const Amplitude e01 = std::conj(m00) * m01 + std::conj(m10) * m11;
    const Amplitude e10 = std::conj(m01) * m00 + std::conj(m11) * m10;
    const Amplitude e11 = std::conj(m01) * m01 + std::conj(m11) * m11;
    double err = std::abs(e00 - Amplitude{1.0, 0.0});
    err = std::max(err, std::abs(e01));
    err = std::max(err, std::abs(e10));
    err = std::max(err, std::abs(e11 - Amplitude{1.0, 0.0}));
    return err;
}

namespace gates {

Gate2 identity() {
    return Gate2{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
}

Gate2 hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return Gate2{{h, 0.0}, {h, 0.0}, {h, 0.0}, {-h, 0.0}};
}

Gate2 pauli_x() {
    return Gate2{{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
}

Gate2 random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto draw = [&] { return Amplitude{gauss(rng), gauss(rng)}; };

    // Gram-Schmidt on two Gaussian columns.
    Amplitude a = draw(), b = draw();
    double col_norm = std::sqrt(std::norm(a) + std::norm(b));
    while (col_norm < 1e-6) { // vanishing draw; retry
        a = draw();
        b = draw();
        col_norm = std::sqrt(std::norm(a) + std::norm(b));
    }
    a /= col_norm;
    b /= col_norm;

    Amplitude c = draw(), d = draw();
    const Amplitude overlap = std::conj(a) * c + std::conj(b) * d;
    c -= overlap * a;
    d -= overlap * b;
    double second_norm = std::sqrt(std::norm(c) + std::norm(d));
    if (second_norm < 1e-9) {
        // Second column collapsed onto the first; use the orthogonal complement.
        c = -std::conj(b);
        d = std::conj(a);
        second_norm = 1.0;
    }
    c /= second_norm;
    d /= second_norm;

    return Gate2{a, c, b, d};
}

} // namespace gates

void apply_one_qubit_gate(PureState& state, const Gate2& gate, int target) {
    if (target < 0 || target >= state.num_qubits()) {
        throw std::domain_error("gate target " + std::to_string(target) +
                                " out of range for " +
                                std::to_string(state.num_qubits()) + " qubits");
    }
    if (!gate.is_unitary()) {
        throw std::invalid_argument("gate is not unitary: G†G deviates by " +
                                    std::to_string(gate.unitarity_error()));
    }

    auto& amps = state.mutable_amplitudes();
    const std::uint64_t mask = qubit_mask(state.num_qubits(), target);
    const std::uint64_t lo_mask = mask - 1;
    const std::uint64_t hi_mask = ~lo_mask;
    const std::uint64_t pairs = state.dim() >> 1;

    for (std::uint64_t j = 0; j < pairs; ++j) {
        const std::uint64_t i0 = ((j & hi_mask) << 1) | (j & lo_mask);
        const std::uint64_t i1 = i0 | mask;

        const Amplitude a0 = amps[i0];
        const Amplitude a1 = amps[i1];
        amps[i0] = gate.m00 * a0 + gate.m01 * a1;
        amps[i1] = gate.m10 * a0 + gate.m11 * a1;
    }
}

void apply_hadamard_layer(PureState& state, const std::vector<int>& targets) {
    std::uint64_t seen = 0;
    for (int q : targets) {
        if (q < 0 || q >= state.num_qubits()) {
            throw std::domain_error("layer target " + std::to_string(q) +
                                    " out of range");
        }
        const std::uint64_t bit = std::uint64_t{1} << q;
        if (seen & bit) {
            throw std::domain_error("duplicate layer target " + std::to_string(q));
        }
        seen |= bit;
    }
    const Gate2 h = gates::hadamard();
    for (int q : targets) {
        apply_one_qubit_gate(state, h, q);
    }
}

} // namespace qsl
