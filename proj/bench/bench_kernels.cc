// Copyright 2026 The czdg Authors.
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

// Serial reference vs OpenMP kernels: all-pairs distances, the ring axiom
// scan and the branch and bound. Set OMP_NUM_THREADS to vary the team.

#include <random>

#include "benchmark/benchmark.h"
#include "czdg/graph.h"
#include "czdg/ring.h"
#include "czdg/solver.h"
#include "czdg/spec_parser.h"
#include "czdg/zdg.h"
#include "graph_factories.h"

namespace czdg {
namespace {

const Graph& zdg_of_z720() {
  static const Graph g = build_zdg(build_ring("Z720"));
  return g;
}

void BM_DistancesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances_serial(zdg_of_z720()));
}
BENCHMARK(BM_DistancesSerial)->Unit(benchmark::kMillisecond);

void BM_DistancesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(zdg_of_z720()));
}
BENCHMARK(BM_DistancesParallel)->Unit(benchmark::kMillisecond);

const FiniteRing& axiom_ring() {
  static const FiniteRing r = build_ring("Z4 x GF(4) x Z8");
  return r;
}

void BM_AxiomsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_axiom_violation_serial(axiom_ring()));
}
BENCHMARK(BM_AxiomsSerial)->Unit(benchmark::kMillisecond);

void BM_AxiomsParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_axiom_violation(axiom_ring()));
}
BENCHMARK(BM_AxiomsParallel)->Unit(benchmark::kMillisecond);

// Random graphs have few twins, so the search does real work.
const Graph& search_graph() {
  static const Graph g = [] {
    std::mt19937 rng(3);
    return testing::random_connected(34, 0.12, rng);
  }();
  return g;
}

void run_solver(benchmark::State& state, bool parallel) {
  SolveOptions opts;
  opts.parallel = parallel;
  const SolveMode mode = static_cast<SolveMode>(state.range(0));
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = solve_graph(search_graph(), mode, opts).explored_nodes;
  state.counters["nodes"] = static_cast<double>(nodes);
  state.SetLabel(std::string(solve_mode_name(mode)));
}

void BM_SolveSerial(benchmark::State& state) { run_solver(state, false); }
BENCHMARK(BM_SolveSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SolveParallel(benchmark::State& state) { run_solver(state, true); }
BENCHMARK(BM_SolveParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace czdg

BENCHMARK_MAIN();
