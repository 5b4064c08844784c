// Copyright 2026 The anongame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "anongame/distributions.h"
#include "anongame/harness.h"
#include "anongame/rounding.h"
#include "anongame/solve_ptas.h"
#include "anongame/solve_pure.h"

namespace anongame {
namespace {

void BM_PoissonBinomial(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::vector<double> p = RandomMeans(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(PoissonBinomial(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PoissonBinomial)->RangeMultiplier(4)->Range(64, 4096)
    ->Complexity(benchmark::oNSquared);

void BM_RoundProbabilities(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const std::vector<double> p = RandomMeans(rng, state.range(0));
  const RoundingConfig config{.k = static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(RoundProbabilities(p, config));
}
BENCHMARK(BM_RoundProbabilities)->ArgsProduct({{100, 1000, 10000}, {16, 400}});

void BM_ExactTvAfterRounding(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const std::vector<double> p = RandomMeans(rng, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExactTvAfterRounding(p, {.k = 100}));
  }
}
BENCHMARK(BM_ExactTvAfterRounding)->Arg(50)->Arg(500)->Arg(1000);

void BM_SolvePure(benchmark::State& state) {
  const AnonymousGame game = GenerateLipschitzGame(
      state.range(0), state.range(1), 0.01, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolvePure(game, {.threads = 1}));
  }
}
BENCHMARK(BM_SolvePure)->Args({10, 2})->Args({20, 3})->Args({12, 4});

void BM_FindMinimumThreshold(benchmark::State& state) {
  const AnonymousGame game = GenerateLipschitzGame(
      state.range(0), state.range(1), 0.01, 5);
  for (auto _ : state) benchmark::DoNotOptimize(FindMinimumThreshold(game, 1));
}
BENCHMARK(BM_FindMinimumThreshold)->Args({10, 2})->Args({12, 3});

void BM_SolvePtas(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const AnonymousGame game = RandomBinaryGame(rng, state.range(0));
  const PtasOptions options{.k = static_cast<int>(state.range(1)),
                            .minimize = true,
                            .threads = 1};
  for (auto _ : state) benchmark::DoNotOptimize(SolvePtas(game, options));
}
BENCHMARK(BM_SolvePtas)->Args({4, 6})->Args({6, 8})->Args({8, 10})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace anongame

BENCHMARK_MAIN();
