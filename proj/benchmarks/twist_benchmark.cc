// Copyright 2026 The Authors.
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

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "deltatwist/bouquet.h"
#include "deltatwist/gf2.h"
#include "deltatwist/graph.h"
#include "deltatwist/random.h"
#include "deltatwist/set_system.h"
#include "deltatwist/twist_polynomial.h"

namespace deltatwist {
namespace {

LoopedGraph Sample(int n) {
  Rng rng = Rng(7).Split(static_cast<std::uint64_t>(n));
  return RandomGraph(n, 0.5, 0.3, rng);
}

void BM_TwistRankTable(benchmark::State& state) {
  const LoopedGraph g = Sample(static_cast<int>(state.range(0)));
  RankTableOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(TwistPolynomial(g, options));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << g.size()));
}
BENCHMARK(BM_TwistRankTable)
    ->ArgsProduct({{14, 16, 18, 20}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_TwistSetSystem(benchmark::State& state) {
  const SetSystem d = FromGraph(Sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(TwistPolynomial(d));
}
BENCHMARK(BM_TwistSetSystem)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_FromGraph(benchmark::State& state) {
  const LoopedGraph g = Sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(FromGraph(g));
}
BENCHMARK(BM_FromGraph)->DenseRange(10, 16, 3)->Unit(benchmark::kMillisecond);

void BM_MaskedRank(benchmark::State& state) {
  const LoopedGraph g = Sample(static_cast<int>(state.range(0)));
  const std::vector<std::uint64_t> rows = g.adjacency().RowMasks();
  std::uint64_t mask = 0;
  const std::uint64_t full = (std::uint64_t{1} << g.size()) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaskedRank(rows, mask));
    mask = (mask + 0x9e3779b97f4a7c15ULL) & full;
  }
}
BENCHMARK(BM_MaskedRank)->Arg(16)->Arg(32)->Arg(60);

void BM_GenusPolynomial(benchmark::State& state) {
  Rng rng(11);
  const Bouquet b = RandomBouquet(static_cast<int>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(PartialDualGenusPolynomial(b));
}
BENCHMARK(BM_GenusPolynomial)->DenseRange(8, 14, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace deltatwist

BENCHMARK_MAIN();
