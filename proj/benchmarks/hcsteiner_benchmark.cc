// Copyright 2026 The hcsteiner Authors.
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


#include <random>

#include <benchmark/benchmark.h>

#include "hcsteiner/autgroup.h"
#include "hcsteiner/bounds.h"
#include "hcsteiner/cube.h"
#include "hcsteiner/domination.h"
#include "hcsteiner/steiner.h"

namespace hcsteiner {
namespace {

VertexSet FirstEven(Dimension dim, int k) {
  const VertexSet even = ParityClass(dim, 0);
  return VertexSet::FromVertices(
      dim, std::vector<Vertex>(even.begin(), even.begin() + k));
}

// Args: n, number of terminals.
void BM_SteinerExact(benchmark::State& state) {
  const SteinerInstance instance(
      FirstEven(Dimension(state.range(0)), state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SteinerExact(instance).distance);
  }
}
BENCHMARK(BM_SteinerExact)
    ->Args({4, 8})
    ->Args({5, 8})
    ->Args({5, 12})
    ->Args({6, 10})
    ->Args({8, 8})
    ->Unit(benchmark::kMillisecond);

void BM_SteinerBruteOracle(benchmark::State& state) {
  const SteinerInstance instance(FirstEven(Dimension(4), state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SteinerBruteOracle(instance));
  }
}
BENCHMARK(BM_SteinerBruteOracle)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VerifySharpEdgeTransitivity(benchmark::State& state) {
  const Dimension dim(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(VerifySharpEdgeTransitivity(dim).ok);
  }
}
BENCHMARK(BM_VerifySharpEdgeTransitivity)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_GreedySteinerized(benchmark::State& state) {
  const Dimension dim(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Steinerize(GreedyDominatingSet(dim).set()).size());
  }
}
BENCHMARK(BM_GreedySteinerized)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_ExactConnectedDomination(benchmark::State& state) {
  const Dimension dim(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExactConnectedDominationNumber(dim));
  }
}
BENCHMARK(BM_ExactConnectedDomination)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveIntersection(benchmark::State& state) {
  const Dimension dim(state.range(0));
  const IntersectionExperiment exp =
      IntersectionExperiment::ForEvenSet(FirstEven(dim, state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunIntersectionExperiment(exp, Exhaustive{}).max);
  }
}
BENCHMARK(BM_ExhaustiveIntersection)
    ->Args({4, 8})
    ->Args({5, 10})
    ->Args({6, 8})
    ->Unit(benchmark::kMillisecond);

void BM_SampledIntersection(benchmark::State& state) {
  const IntersectionExperiment exp =
      IntersectionExperiment::ForEvenSet(FirstEven(Dimension(8), 8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RunIntersectionExperiment(exp, Sampled{.count = 10000, .seed = 1}).max);
  }
}
BENCHMARK(BM_SampledIntersection)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hcsteiner

BENCHMARK_MAIN();
