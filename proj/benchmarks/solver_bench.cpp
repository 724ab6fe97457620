// Copyright 2026 The pvc5 Authors
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

#include "pvc5/branching.hpp"
#include "pvc5/compression.hpp"
#include "pvc5/generators.hpp"
#include "pvc5/oracles.hpp"
#include "pvc5/p5.hpp"
#include "pvc5/stats.hpp"

namespace pvc5 {
namespace {

// Cycle C_{5k+1} needs exactly k + 1 deletions; ask for k to force the full
// NO search.
void BM_IcCycleNo(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph g = cycle_graph(5 * k + 1);
  StatsCollector stats;
  for (auto _ : state) benchmark::DoNotOptimize(solve_5pvc(g, k, &stats));
  state.counters["nodes"] =
      benchmark::Counter(static_cast<double>(stats.stats().nodes), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_IcCycleNo)->DenseRange(1, 5);

void BM_TrivialCycleNo(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph g = cycle_graph(5 * k + 1);
  SolveStats stats;
  for (auto _ : state) benchmark::DoNotOptimize(trivial_branching(g, k, &stats));
  state.counters["nodes"] =
      benchmark::Counter(static_cast<double>(stats.nodes), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_TrivialCycleNo)->DenseRange(1, 5);

void BM_IcMinGnp(benchmark::State& state) {
  const Graph g = gnp_graph(static_cast<std::size_t>(state.range(0)), 0.2, 42);
  for (auto _ : state) benchmark::DoNotOptimize(min_5pvc(g));
}
BENCHMARK(BM_IcMinGnp)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_BruteForceGnp(benchmark::State& state) {
  const Graph g = gnp_graph(static_cast<std::size_t>(state.range(0)), 0.2, 42);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_min_pvc(g));
}
BENCHMARK(BM_BruteForceGnp)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_FindP5(benchmark::State& state) {
  const Graph g = gnp_graph(static_cast<std::size_t>(state.range(0)), 0.05, 3);
  for (auto _ : state) benchmark::DoNotOptimize(find_p5(g));
}
BENCHMARK(BM_FindP5)->Arg(50)->Arg(200);

void BM_FactorTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_factor_table());
}
BENCHMARK(BM_FactorTable);

}  // namespace
}  // namespace pvc5

BENCHMARK_MAIN();
