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

// Acceptance suite: every release-gating statement in one binary, one
// pass/fail line per criterion, with the tolerances pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qsearchlab/algorithms.hpp"
#include "qsearchlab/entanglement.hpp"
#include "qsearchlab/qudit.hpp"
#include "reference.hpp"

using namespace qsl;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string&)> run;
};

std::string fmt(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", value);
    return buf;
}

// 1. Single-query identification: for every width 1..8 and every answer, one
// quantum query and a point-mass output distribution within 1e-12.
bool criterion_single_query(std::string& detail) {
    double worst = 0.0;
    bool ok = true;
    std::uint64_t runs = 0;
    for (int n = 1; n <= 8; ++n) {
        const std::uint64_t num_records = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < num_records; ++a) {
            SophisticatedOracle oracle = SophisticatedOracle::with_answer(n, a);
            const SearchResult result = run_bv(n, oracle);
            ok = ok && (result.ledger.quantum_queries == 1);
            ok = ok && (result.top_guess == a);
            worst = std::max(worst, std::abs(result.success_probability - 1.0));
            ++runs;
        }
    }
    ok = ok && (worst <= 1e-12);
    detail = std::to_string(runs) + " runs, max |p(a) - 1| = " + fmt(worst);
    return ok;
}

// 2. No entanglement in the single-query circuit: all four snapshots fully
// product (every single-qubit-cut purity >= 1 - 1e-10), all widths, all
// answers.
bool criterion_bv_product(std::string& detail) {
    double min_purity = 1.0;
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
        const std::uint64_t num_records = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < num_records; ++a) {
            SophisticatedOracle oracle = SophisticatedOracle::with_answer(n, a);
            const SearchResult result = run_bv(n, oracle);
            const EntanglementReport report = analyze_trajectory(result.trajectory);
            ok = ok && (report.snapshots.size() == 4);
            for (const SnapshotVerdicts& snap : report.snapshots) {
                ok = ok && snap.fully_product;
                for (const CutVerdict& cut : snap.cuts) {
                    min_purity = std::min(min_purity, cut.purity);
                }
            }
        }
    }
    ok = ok && (min_purity >= 1.0 - 1e-10);
    detail = "min cut purity = 1 - " + fmt(1.0 - min_purity);
    return ok;
}

// 3. Membership-search round count and success: default rounds equal
// floor(pi/4 sqrt(N)); simulated success matches the analytic closed form
// within 1e-9 for N in {4, 16, 64, 256, 1024}; N = 4 succeeds exactly.
bool criterion_grover_success(std::string& detail) {
    bool ok = true;
    double worst_dev = 0.0;
    for (int n : {2, 4, 6, 8, 10}) {
        const std::uint64_t num_records = std::uint64_t{1} << n;
        const int expected_rounds = static_cast<int>(std::floor(
            3.14159265358979323846 / 4.0 * std::sqrt(static_cast<double>(num_records))));
        for (std::uint64_t a :
             {std::uint64_t{0}, num_records / 2, num_records - 1}) {
            NaiveOracle oracle = NaiveOracle::with_answer(n, a);
            const SearchResult result = run_grover(n, oracle);
            ok = ok && (result.iterations == expected_rounds);
            ok = ok && (result.ledger.quantum_queries ==
                        static_cast<std::uint64_t>(expected_rounds));
            const double analytic =
                grover_analytic_success(num_records, result.iterations);
            worst_dev =
                std::max(worst_dev, std::abs(result.success_probability - analytic));
            if (num_records == 4) {
                ok = ok && (std::abs(result.success_probability - 1.0) <= 1e-12);
            }
        }
    }
    ok = ok && (worst_dev < 1e-9);
    detail = "max |simulated - analytic| = " + fmt(worst_dev);
    return ok;
}

// 4. Membership-search entanglement structure: for widths 2..8 some
// post-preparation snapshot has a cut purity below 1 - 1e-6; at width 1
// every snapshot stays fully product; the ancilla cut stays product
// (purity >= 1 - 1e-10) from psi1 on, all widths, all answers.
bool criterion_grover_entanglement(std::string& detail) {
    bool ok = true;
    double min_ancilla = 1.0;
    for (int n = 1; n <= 8; ++n) {
        const std::uint64_t num_records = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < num_records; ++a) {
            NaiveOracle oracle = NaiveOracle::with_answer(n, a);
            const SearchResult result = run_grover(n, oracle);
            const EntanglementReport report = analyze_trajectory(result.trajectory);

            if (n == 1) {
                for (const SnapshotVerdicts& snap : report.snapshots) {
                    ok = ok && snap.fully_product;
                }
            } else {
                bool some_entangled = false;
                for (const SnapshotVerdicts& snap : report.snapshots) {
                    if (snap.label == "psi0" || snap.label == "psi1") {
                        continue;
                    }
                    for (const CutVerdict& cut : snap.cuts) {
                        some_entangled = some_entangled || (cut.purity < 1.0 - 1e-6);
                    }
                }
                ok = ok && some_entangled;
            }
            for (std::size_t i = 1; i < report.ancilla_series.size(); ++i) {
                min_ancilla =
                    std::min(min_ancilla, report.ancilla_series[i].second.purity);
                ok = ok && report.ancilla_series[i].second.is_product;
            }
        }
    }
    ok = ok && (min_ancilla >= 1.0 - 1e-10);
    detail = "min ancilla purity after psi1 = 1 - " + fmt(1.0 - min_ancilla);
    return ok;
}

// 5. Classical baselines: the adversarial membership database costs exactly
// N-1 queries for N in {2, 8, 64}; unit-vector probing costs exactly n and
// is always right, exhaustively to width 6.
bool criterion_classical(std::string& detail) {
    bool ok = true;
    for (int n : {1, 3, 6}) {
        NaiveOracle adversary = NaiveOracle::adversarial(n);
        const ClassicalSearchResult found = classical_naive_search(adversary);
        const std::uint64_t num_records = std::uint64_t{1} << n;
        ok = ok && (found.queries == num_records - 1);
        ok = ok && (found.answer == OracleTestAccess::answer(adversary));
    }
    std::uint64_t probes = 0;
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t num_records = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < num_records; ++a) {
            SophisticatedOracle oracle = SophisticatedOracle::with_answer(n, a);
            const ClassicalSearchResult found = classical_sophisticated_search(oracle);
            ok = ok && (found.queries == static_cast<std::uint64_t>(n));
            ok = ok && (found.answer == a);
            ++probes;
        }
    }
    detail = "adversarial N-1 exact; " + std::to_string(probes) +
             " unit-vector searches exact";
    return ok;
}

// 6. Entanglement removal by re-encoding: level-based runs of both circuits
// reproduce the register-based output distributions within 1e-12 per outcome
// up to width 10; the level-side entanglement field is "not applicable" and
// never "product".
bool criterion_qudit_equivalence(std::string& detail) {
    bool ok = true;
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
        const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        const std::uint64_t answers[] = {0, (0x9E3779B97F4A7C15ull * (n + 1)) & mask};
        for (std::uint64_t a : answers) {
            NaiveOracle g_register = NaiveOracle::with_answer(n, a);
            const SearchResult register_run = run_grover(n, g_register);
            NaiveOracle g_levels = NaiveOracle::with_answer(n, a);
            const QuditSearchResult level_run = run_grover_on_qudit(n, g_levels);
            for (std::uint64_t i = 0; i <= mask; ++i) {
                worst = std::max(worst, std::abs(level_run.distribution[i] -
                                                 register_run.distribution[i]));
            }
            const std::string field = to_string(level_run.entanglement);
            ok = ok && (field == "not applicable") && (field != "product");

            SophisticatedOracle b_register = SophisticatedOracle::with_answer(n, a);
            const SearchResult bv_register = run_bv(n, b_register);
            SophisticatedOracle b_levels = SophisticatedOracle::with_answer(n, a);
            const QuditSearchResult bv_levels = run_bv_on_qudit(n, b_levels);
            for (std::uint64_t i = 0; i <= mask; ++i) {
                worst = std::max(worst, std::abs(bv_levels.distribution[i] -
                                                 bv_register.distribution[i]));
            }
            const std::string bv_field = to_string(bv_levels.entanglement);
            ok = ok && (bv_field == "not applicable") && (bv_field != "product");
        }
    }
    ok = ok && (worst <= 1e-12);
    detail = "max per-outcome deviation = " + fmt(worst);
    return ok;
}

// 7. Resource-cost scaling: resolution_bits is exactly linear in n with
// slope p, and the monolithic-vs-local census ratio exceeds 2^n for n >= 4.
bool criterion_precision(std::string& detail) {
    bool ok = true;
    const double p = 3.0;
    double prev_bits = 0.0;
    double min_margin = 1e300;
    for (int n = 1; n <= 10; ++n) {
        const PrecisionReport report = precision_cost(n, p);
        ok = ok && (report.resolution_bits == p * n);
        if (n > 1) {
            ok = ok && (report.resolution_bits - prev_bits == p);
        }
        prev_bits = report.resolution_bits;
        ok = ok && (report.required_resolution * report.min_level_spacing == 1.0);

        if (n >= 4) {
            const double ratio =
                static_cast<double>(report.nontrivial_amplitude_count) /
                static_cast<double>(report.poly_local_gate_count);
            min_margin = std::min(min_margin, ratio / std::exp2(n));
            ok = ok && (ratio > std::exp2(n));
        }
    }
    detail = "bits linear with slope 3; min census ratio / 2^n = " + fmt(min_margin);
    return ok;
}

// 8. Oracle/basis-state agreement: both quantum oracles agree with their
// classical queries on every basis state up to width 6, and both are
// involutions within 1e-12.
bool criterion_oracle_agreement(std::string& detail) {
    bool ok = true;
    double worst_involution = 0.0;
    std::uint64_t checked = 0;
    std::mt19937_64 rng(2026);
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t num_records = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < num_records; ++a) {
            NaiveOracle naive = NaiveOracle::with_answer(n, a);
            SophisticatedOracle dot = SophisticatedOracle::with_answer(n, a);
            for (std::uint64_t x = 0; x < num_records; ++x) {
                for (int b = 0; b <= 1; ++b) {
                    const std::uint64_t input = (x << 1) | static_cast<std::uint64_t>(b);

                    PureState state = PureState::basis(n + 1, input);
                    naive.apply(state);
                    NaiveOracle fresh_naive = NaiveOracle::with_answer(n, a);
                    std::uint64_t expected =
                        (x << 1) |
                        static_cast<std::uint64_t>(fresh_naive.classical_query(x, b));
                    ok = ok && (std::abs(state.amplitude(expected) -
                                         Amplitude{1.0, 0.0}) <= 1e-15);

                    PureState state2 = PureState::basis(n + 1, input);
                    dot.apply(state2);
                    SophisticatedOracle fresh_dot =
                        SophisticatedOracle::with_answer(n, a);
                    expected = (x << 1) | static_cast<std::uint64_t>(
                                              fresh_dot.classical_query(x, b));
                    ok = ok && (std::abs(state2.amplitude(expected) -
                                         Amplitude{1.0, 0.0}) <= 1e-15);
                    checked += 2;
                }
            }

            // Involution on a random state.
            const PureState original = testref::random_state(n + 1, rng);
            PureState twice = original;
            naive.apply(twice);
            naive.apply(twice);
            for (std::uint64_t i = 0; i < twice.dim(); ++i) {
                worst_involution = std::max(
                    worst_involution,
                    std::abs(twice.amplitudes()[i] - original.amplitudes()[i]));
            }
            twice = original;
            dot.apply(twice);
            dot.apply(twice);
            for (std::uint64_t i = 0; i < twice.dim(); ++i) {
                worst_involution = std::max(
                    worst_involution,
                    std::abs(twice.amplitudes()[i] - original.amplitudes()[i]));
            }
        }
    }
    ok = ok && (worst_involution <= 1e-12);
    detail = std::to_string(checked) + " basis checks; max involution residual = " +
             fmt(worst_involution);
    return ok;
}

// 9. Local-unitary invariance: 200 trials of one random gate per qubit leave
// every cut purity unchanged within 1e-10.
bool criterion_local_invariance(std::string& detail) {
    std::mt19937_64 rng(424242);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 5); // 2..6 qubits
        const PureState state = (trial % 4 == 0)
                                    ? testref::random_product_state(m, rng)
                                    : testref::random_state(m, rng);
        std::vector<Gate2> gates;
        for (int q = 0; q < m; ++q) {
            gates.push_back(gates::random_unitary(rng));
        }
        ok = ok && local_unitary_invariance_check(state, gates, 1e-10);
    }
    detail = "200 trials at widths 2..6";
    return ok;
}

// 10. Output orthogonality: final single-query states for distinct answers
// are pairwise orthogonal below 1e-12, exhaustively to width 6.
bool criterion_orthogonality(std::string& detail) {
    bool ok = true;
    double worst = 0.0;
    std::uint64_t pairs = 0;
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t num_records = std::uint64_t{1} << n;
        std::vector<PureState> finals;
        finals.reserve(num_records);
        for (std::uint64_t a = 0; a < num_records; ++a) {
            SophisticatedOracle oracle = SophisticatedOracle::with_answer(n, a);
            finals.push_back(run_bv(n, oracle).trajectory.state("psi3"));
        }
        for (std::size_t i = 0; i < finals.size(); ++i) {
            for (std::size_t j = i + 1; j < finals.size(); ++j) {
                worst = std::max(worst, std::abs(inner_product(finals[i], finals[j])));
                ++pairs;
            }
        }
    }
    ok = ok && (worst < 1e-12);
    detail = std::to_string(pairs) + " pairs, max overlap = " + fmt(worst);
    return ok;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "single-query identification (widths 1..8, all answers)",
         criterion_single_query},
        {2, "no entanglement at any single-query timestep", criterion_bv_product},
        {3, "membership-search round count and analytic success",
         criterion_grover_success},
        {4, "membership-search entanglement structure",
         criterion_grover_entanglement},
        {5, "classical baselines: N-1 and n query counts", criterion_classical},
        {6, "level-encoding reproduces register distributions",
         criterion_qudit_equivalence},
        {7, "precision and specification cost scaling", criterion_precision},
        {8, "oracle/basis-state agreement and involutivity",
         criterion_oracle_agreement},
        {9, "local-unitary invariance of cut purities", criterion_local_invariance},
        {10, "pairwise orthogonal outputs for distinct answers",
         criterion_orthogonality},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%s] criterion %2d: %s (%s; %.2fs)\n", pass ? "PASS" : "FAIL",
                    criterion.number, criterion.title.c_str(), detail.c_str(),
                    seconds);
        if (!pass) {
            ++failures;
        }
    }
    std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
