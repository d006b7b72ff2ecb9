// Copyright 2026 The planar_lagrange Authors
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

#include <benchmark/benchmark.h>

#include "planar_lagrange/flags.hpp"
#include "planar_lagrange/inversion.hpp"
#include "planar_lagrange/random.hpp"

using namespace planar_lagrange;

namespace {

TreeSeries input(std::int64_t n) {
  SeededRng rng(1);
  return random_series(static_cast<std::size_t>(n), 4, rng);
}

void BM_Recurrence(benchmark::State& state) {
  const TreeSeries f = input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_inversion_recurrence(f));
}
BENCHMARK(BM_Recurrence)->DenseRange(4, 7);

void BM_Gamma(benchmark::State& state) {
  const TreeSeries f = input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_inversion_gamma(f));
}
BENCHMARK(BM_Gamma)->DenseRange(4, 7);

void BM_Iterate(benchmark::State& state) {
  const TreeSeries f = input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_inversion_iterate(f));
}
BENCHMARK(BM_Iterate)->DenseRange(4, 6);

void BM_EnumeratePrt(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_prt(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumeratePrt)->DenseRange(4, 8);

void BM_Decompositions(benchmark::State& state) {
  const auto trees = enumerate_right_sided(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& t : trees) total += enumerate_decompositions(t).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_Decompositions)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
