// Copyright 2026 The ofal Authors
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

#include "ofal/adversary.hpp"
#include "ofal/harness.hpp"
#include "ofal/offline.hpp"
#include "ofal/online.hpp"

#include <benchmark/benchmark.h>

using namespace ofal;

// Incremental solve of a full random sequence on k servers of capacity 4.
static void BM_SolveOptimal(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const Instance inst = make_equispaced_instance(k, 4);
    const RequestSequence seq = gen_random(k, 4, inst.total_capacity(), 1, Rational(-1), Rational(k));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_optimal(inst, seq).cost);
    state.SetItemsProcessed(state.iterations() * static_cast<long>(seq.size()));
}
BENCHMARK(BM_SolveOptimal)->RangeMultiplier(2)->Range(2, 32)->Unit(benchmark::kMicrosecond);

static void BM_BruteForce(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Instance inst = make_equispaced_instance(4, 2);
    const RequestSequence seq = gen_random(4, 2, n, 7, Rational(-1), Rational(4));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_optimal(inst, seq).cost);
}
BENCHMARK(BM_BruteForce)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_PermLowerBound(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const Instance inst = make_equispaced_instance(k, 1);
    const RequestSequence seq = gen_theorem1(k, Rational(1, 100));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_online(Algorithm::perm, inst, seq).total());
}
BENCHMARK(BM_PermLowerBound)->DenseRange(2, 12, 2)->Unit(benchmark::kMicrosecond);

static void BM_Sweep(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(2, 12, 1, Rational(1, 100), Algorithm::perm).size());
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
