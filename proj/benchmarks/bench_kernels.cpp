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

#include <benchmark/benchmark.h>

#include "qsearchlab/algorithms.hpp"
#include "qsearchlab/density.hpp"
#include "qsearchlab/gates.hpp"
#include "qsearchlab/qudit.hpp"

using namespace qsl;

namespace {

void BM_SingleQubitGate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PureState psi = PureState::basis(n, 0);
    const Gate2 h = gates::hadamard();
    int target = 0;
    for (auto _ : state) {
        apply_one_qubit_gate(psi, h, target);
        target = (target + 1) % n;
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_SingleQubitGate)->Arg(10)->Arg(14)->Arg(18)->Arg(20);

void BM_HadamardLayer(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PureState psi = PureState::basis(n, 0);
    std::vector<int> targets(n);
    for (int q = 0; q < n; ++q) {
        targets[q] = q;
    }
    for (auto _ : state) {
        apply_hadamard_layer(psi, targets);
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * n * (std::int64_t{1} << n));
}
BENCHMARK(BM_HadamardLayer)->Arg(10)->Arg(14)->Arg(18);

void BM_OracleApply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SophisticatedOracle oracle =
        SophisticatedOracle::with_answer(n, (std::uint64_t{1} << n) - 1);
    PureState psi = PureState::basis(n + 1, 0);
    apply_hadamard_layer(psi, {0});
    for (auto _ : state) {
        oracle.apply(psi);
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_OracleApply)->Arg(10)->Arg(14)->Arg(18);

void BM_GroverRun(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        NaiveOracle oracle = NaiveOracle::with_answer(n, 1);
        const SearchResult result = run_grover(n, oracle);
        benchmark::DoNotOptimize(result.success_probability);
    }
}
BENCHMARK(BM_GroverRun)->Arg(6)->Arg(10)->Arg(12);

void BM_SingleCutPurity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PureState psi = PureState::basis(n, 0);
    std::vector<int> targets(n);
    for (int q = 0; q < n; ++q) {
        targets[q] = q;
    }
    apply_hadamard_layer(psi, targets);
    for (auto _ : state) {
        benchmark::DoNotOptimize(purity(partial_trace(psi, {0})));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_SingleCutPurity)->Arg(10)->Arg(14)->Arg(18);

void BM_DenseWalshLayer(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    QuditState psi = QuditState::basis(std::uint64_t{1} << n, 0);
    for (auto _ : state) {
        apply_walsh_layer(psi);
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * n)));
}
BENCHMARK(BM_DenseWalshLayer)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

} // namespace

BENCHMARK_MAIN();
