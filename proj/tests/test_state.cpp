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

#include <cmath>
#include <random>

#include "doctest.h"

#include "qsearchlab/gates.hpp"
#include "qsearchlab/state.hpp"
#include "reference.hpp"

using namespace qsl;

TEST_SUITE_BEGIN("state");

TEST_CASE("basis states place a single unit amplitude") {
    const PureState zero = PureState::basis(1, 0);
    CHECK(zero.amplitude(0) == Amplitude{1.0, 0.0});
    CHECK(zero.amplitude(1) == Amplitude{0.0, 0.0});

    const PureState three = PureState::basis(2, 3);
    for (std::uint64_t i = 0; i < 4; ++i) {
        CHECK(three.amplitude(i) == (i == 3 ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0}));
    }

    // The all-zeros initial state of both circuits, at n = 3.
    const PureState psi0 = PureState::basis(4, 0);
    CHECK(psi0.amplitude(0) == Amplitude{1.0, 0.0});
    CHECK(psi0.norm_error() == 0.0);
}

TEST_CASE("basis index and width are validated") {
    CHECK_THROWS_AS(PureState::basis(2, 4), std::domain_error);
    CHECK_THROWS_AS(PureState::basis(0, 0), std::domain_error);
    CHECK_THROWS_AS(PureState::basis(kMaxQubits + 1, 0), std::domain_error);
}

TEST_CASE("from_amplitudes enforces the invariants") {
    CHECK_THROWS_AS(PureState::from_amplitudes(2, {Amplitude{1.0, 0.0}}),
                    std::domain_error); // wrong length
    CHECK_THROWS_AS(PureState::from_amplitudes(1, {{0.5, 0.0}, {0.5, 0.0}}),
                    std::domain_error); // norm 0.5
    CHECK_THROWS_AS(PureState::from_amplitudes(
                        1, {{std::nan(""), 0.0}, {1.0, 0.0}}),
                    std::domain_error);
    const double h = 1.0 / std::sqrt(2.0);
    const PureState plus = PureState::from_amplitudes(1, {{h, 0.0}, {h, 0.0}});
    CHECK(plus.norm_error() <= kNormTol);
}

TEST_CASE("full-register distribution of a basis state is a point mass") {
    const PureState three = PureState::basis(2, 3);
    const std::vector<double> table = measurement_distribution(three, {0, 1});
    REQUIRE(table.size() == 4);
    CHECK(table[3] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(table[0] + table[1] + table[2] == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("uniform superposition measures uniformly on the guess register") {
    // H layer on all guess qubits of |0...0>, ancilla untouched.
    const int n = 4;
    PureState state = PureState::basis(n + 1, 0);
    apply_hadamard_layer(state, {0, 1, 2, 3});
    const std::vector<double> table = measurement_distribution(state, {0, 1, 2, 3});
    for (double p : table) {
        CHECK(p == doctest::Approx(1.0 / 16).epsilon(1e-13));
    }
}

TEST_CASE("measurement distribution respects the listed qubit order") {
    // |10>: qubit 0 reads 1, qubit 1 reads 0.
    const PureState state = PureState::basis(2, 2);
    const std::vector<double> forward = measurement_distribution(state, {0, 1});
    CHECK(forward[2] == doctest::Approx(1.0));
    const std::vector<double> reversed = measurement_distribution(state, {1, 0});
    CHECK(reversed[1] == doctest::Approx(1.0));
}

TEST_CASE("marginal consistency: subset distribution equals marginalized full table") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 5); // 2..6 qubits
        const PureState state = testref::random_state(m, rng);

        std::vector<int> all(m);
        for (int q = 0; q < m; ++q) {
            all[q] = q;
        }
        const std::vector<double> full = measurement_distribution(state, all);

        // Random nonempty subset, in ascending order.
        std::vector<int> subset;
        for (int q = 0; q < m; ++q) {
            if (rng() & 1) {
                subset.push_back(q);
            }
        }
        if (subset.empty()) {
            subset.push_back(static_cast<int>(rng() % m));
        }

        const std::vector<double> marginal = measurement_distribution(state, subset);
        std::vector<double> expected(marginal.size(), 0.0);
        for (std::uint64_t i = 0; i < full.size(); ++i) {
            std::uint64_t packed = 0;
            for (std::size_t j = 0; j < subset.size(); ++j) {
                if (i & qubit_mask(m, subset[j])) {
                    packed |= std::uint64_t{1} << (subset.size() - 1 - j);
                }
            }
            expected[packed] += full[i];
        }
        double sum = 0.0;
        for (std::size_t k = 0; k < marginal.size(); ++k) {
            CHECK(std::abs(marginal[k] - expected[k]) <= 1e-12);
            sum += marginal[k];
        }
        CHECK(std::abs(sum - 1.0) <= kNormTol);
    }
}

TEST_CASE("measurement subset indices are validated") {
    const PureState state = PureState::basis(2, 0);
    CHECK_THROWS_AS(measurement_distribution(state, {0, 0}), std::domain_error);
    CHECK_THROWS_AS(measurement_distribution(state, {2}), std::domain_error);
    CHECK_THROWS_AS(measurement_distribution(state, {-1}), std::domain_error);
}

TEST_CASE("inner product is conjugate-linear and width-checked") {
    const PureState a = PureState::basis(2, 1);
    const PureState b = PureState::basis(2, 2);
    CHECK(std::abs(inner_product(a, b)) == 0.0);
    CHECK(inner_product(a, a) == Amplitude{1.0, 0.0});
    CHECK_THROWS_AS(inner_product(a, PureState::basis(3, 0)), std::domain_error);

    std::mt19937_64 rng(11);
    const PureState psi = testref::random_state(3, rng);
    const PureState phi = testref::random_state(3, rng);
    CHECK(std::abs(inner_product(psi, phi) - std::conj(inner_product(phi, psi))) <=
          1e-14);
}

TEST_CASE("seeded sampler is deterministic and supported on the distribution") {
    std::mt19937_64 gen(5);
    const PureState state = testref::random_state(4, gen);
    std::mt19937_64 rng_a(123), rng_b(123);
    const std::uint64_t first = sample_measurement(state, {0, 1, 2, 3}, rng_a);
    const std::uint64_t second = sample_measurement(state, {0, 1, 2, 3}, rng_b);
    CHECK(first == second);
    const std::vector<double> table = measurement_distribution(state, {0, 1, 2, 3});
    CHECK(table[first] > 0.0);
}

TEST_SUITE_END();
