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

#include "qsearchlab/qudit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qsearchlab/algorithms.hpp"
#include "qsearchlab/density.hpp"
#include "qsearchlab/gates.hpp"

namespace qsl {

namespace {

void check_dim(std::uint64_t dim) {
    if (dim < 2 || !std::has_single_bit(dim) ||
        dim > (std::uint64_t{1} << kMaxQubits)) {
        throw std::domain_error("level count must be a power of two in [2, 2^" +
                                std::to_string(kMaxQubits) + "]");
    }
}

std::uint64_t argmax(const std::vector<double>& table) {
    return static_cast<std::uint64_t>(
        std::max_element(table.begin(), table.end()) - table.begin());
}

// Validates the width and prepares the uniform level superposition, the
// single-particle image of psi1's guess factor.
QuditState prepare_uniform(int n) {
    if (n < 1 || n + 1 > kMaxQubits) {
        throw std::domain_error("qudit register width out of range");
    }
    QuditState state = QuditState::basis(std::uint64_t{1} << n, 0);
    apply_walsh_layer(state);
    return state;
}

} // namespace

QuditState QuditState::basis(std::uint64_t dim, std::uint64_t level) {
    check_dim(dim);
    if (level >= dim) {
        throw std::domain_error("level index out of range");
    }
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    amps[level] = Amplitude{1.0, 0.0};
    return QuditState(std::move(amps));
}

QuditState QuditState::from_amplitudes(std::vector<Amplitude> amps) {
    check_dim(amps.size());
    double norm2 = 0.0;
    for (const Amplitude& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::domain_error("non-finite amplitude");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kNormTol) {
        throw std::domain_error("amplitude vector is not normalized");
    }
    return QuditState(std::move(amps));
}

Amplitude QuditState::amplitude(std::uint64_t level) const {
    if (level >= amps_.size()) {
        throw std::domain_error("level index out of range");
    }
    return amps_[level];
}

double QuditState::norm_error() const {
    double norm2 = 0.0;
    for (const Amplitude& a : amps_) {
        norm2 += std::norm(a);
    }
    return std::abs(norm2 - 1.0);
}

PureState factor_out_ancilla(const PureState& state, double tol) {
    const int m = state.num_qubits();
    if (m < 2) {
        throw std::domain_error("need a guess register plus ancilla to factor");
    }
    const int ancilla = m - 1;

    const DensityMatrix rho = partial_trace(state, {ancilla});
    if (purity(rho) < 1.0 - tol) {
        throw std::domain_error("cannot factor: the response qubit is entangled "
                                "with the guess register");
    }

    // Principal eigenvector of the (pure) 2x2 reduction, phase-fixed so the
    // larger component is real positive.
    const Amplitude r00 = rho.entry(0, 0);
    const Amplitude r01 = rho.entry(0, 1);
    const Amplitude r11 = rho.entry(1, 1);
    Amplitude chi0, chi1;
    if (r00.real() >= r11.real()) {
        chi0 = r00;
        chi1 = std::conj(r01);
    } else {
        chi0 = r01;
        chi1 = r11;
    }
    const double vec_norm = std::sqrt(std::norm(chi0) + std::norm(chi1));
    chi0 /= vec_norm;
    chi1 /= vec_norm;
    const Amplitude pivot = std::abs(chi0) >= std::abs(chi1) ? chi0 : chi1;
    const Amplitude phase = pivot / std::abs(pivot);
    chi0 /= phase;
    chi1 /= phase;

    const int b = std::abs(chi0) >= std::abs(chi1) ? 0 : 1;
    const Amplitude divisor = (b == 0) ? chi0 : chi1;

    const std::uint64_t guesses = std::uint64_t{1} << (m - 1);
    std::vector<Amplitude> guess_amps(guesses);
    double norm2 = 0.0;
    for (std::uint64_t x = 0; x < guesses; ++x) {
        guess_amps[x] = state.amplitude((x << 1) | static_cast<std::uint64_t>(b)) / divisor;
        norm2 += std::norm(guess_amps[x]);
    }
    // Remove the residual rounding drift from the division.
    const double scale = 1.0 / std::sqrt(norm2);
    for (Amplitude& a : guess_amps) {
        a *= scale;
    }
    return PureState::from_amplitudes(m - 1, std::move(guess_amps));
}

QuditState embed_as_qudit(const PureState& register_state) {
    return QuditState::from_amplitudes(register_state.amplitudes());
}

std::vector<double> level_distribution(const QuditState& state) {
    std::vector<double> table(state.dim());
    const auto& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        table[i] = std::norm(amps[i]);
    }
    return table;
}

void apply_walsh_layer(QuditState& state) {
    const std::uint64_t dim = state.dim();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    const auto& in = state.amplitudes();

    // Compensated accumulation keeps the row sums stable through the heavy
    // sign cancellation of repeated dense applications.
    auto add = [](double& sum, double& comp, double value) {
        const double t = sum + value;
        if (std::abs(sum) >= std::abs(value)) {
            comp += (sum - t) + value;
        } else {
            comp += (value - t) + sum;
        }
        sum = t;
    };

    // One dense dim x dim pass; entries (-1)^(i.j)/sqrt(dim) are generated on
    // the fly but every one of the dim^2 matrix elements participates.
    std::vector<Amplitude> out(dim, Amplitude{0.0, 0.0});
    for (std::uint64_t i = 0; i < dim; ++i) {
        double sum_re = 0.0, comp_re = 0.0;
        double sum_im = 0.0, comp_im = 0.0;
        for (std::uint64_t j = 0; j < dim; ++j) {
            const double sign = (std::popcount(i & j) & 1u) ? -1.0 : 1.0;
            add(sum_re, comp_re, sign * in[j].real());
            add(sum_im, comp_im, sign * in[j].imag());
        }
        out[i] = Amplitude{(sum_re + comp_re) * scale, (sum_im + comp_im) * scale};
    }
    state.mutable_amplitudes() = std::move(out);
}

void apply_zero_reflection(QuditState& state) {
    state.mutable_amplitudes()[0] *= -1.0;
}

const char* to_string(QuditEntanglementField) {
    return "not applicable";
}

QuditSearchResult run_grover_on_qudit(int n, NaiveOracle& oracle,
                                      std::optional<int> iterations) {
    if (oracle.width() != n) {
        throw std::domain_error("oracle width does not match requested register");
    }
    const int rounds =
        iterations.value_or(grover_default_iterations(std::uint64_t{1} << n));
    if (rounds < 0) {
        throw std::domain_error("iteration count must be nonnegative");
    }

    QuditState state = prepare_uniform(n);
    QuditSearchResult result;
    for (int k = 0; k < rounds; ++k) {
        oracle.apply_phase(state);
        apply_walsh_layer(state);
        apply_zero_reflection(state);
        apply_walsh_layer(state);
        ++result.reflections;
    }

    result.iterations = rounds;
    result.distribution = level_distribution(state);
    result.top_level = argmax(result.distribution);
    result.success_probability = oracle.answer_probability(result.distribution);
    result.ledger = oracle.ledger();
    result.top_level_phase = std::arg(state.amplitude(result.top_level));
    return result;
}

QuditSearchResult run_bv_on_qudit(int n, SophisticatedOracle& oracle) {
    if (oracle.width() != n) {
        throw std::domain_error("oracle width does not match requested register");
    }

    QuditState state = prepare_uniform(n);
    oracle.apply_phase(state);
    apply_walsh_layer(state);

    QuditSearchResult result;
    result.iterations = 0;
    result.distribution = level_distribution(state);
    result.top_level = argmax(result.distribution);
    result.success_probability = oracle.answer_probability(result.distribution);
    result.ledger = oracle.ledger();
    result.top_level_phase = std::arg(state.amplitude(result.top_level));
    return result;
}

std::uint64_t monolithic_nontrivial_entries(int n) {
    const std::uint64_t num_levels = std::uint64_t{1} << n;
    return 2 * num_levels * num_levels + num_levels;
}

std::uint64_t local_gate_count(int n) {
    // X on the ancilla, H on all n+1 wires, H layer on the n guess wires.
    return 2 * static_cast<std::uint64_t>(n) + 2;
}

PrecisionReport precision_cost(int n, double detuning_exponent) {
    if (n < 1 || n > 30) {
        throw std::domain_error("precision census supports n in [1, 30]");
    }
    if (!(detuning_exponent > 0.0)) {
        throw std::domain_error("detuning exponent must be positive");
    }

    PrecisionReport report;
    report.n = n;
    report.detuning_exponent = detuning_exponent;
    report.resolution_bits = detuning_exponent * n;
    report.min_level_spacing = std::exp2(-report.resolution_bits);
    report.required_resolution = 1.0 / report.min_level_spacing;
    report.nontrivial_amplitude_count = monolithic_nontrivial_entries(n);
    report.poly_local_gate_count = local_gate_count(n);
    return report;
}

} // namespace qsl
