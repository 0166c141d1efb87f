// Copyright 2026 The choqdist Authors.
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

// Serial reference vs parallel kernels on the 512-point distribution grid.

#include <benchmark/benchmark.h>

#include "choqdist/distribution.hpp"
#include "choqdist/parallel.hpp"
#include "support/generators.hpp"

namespace {

using namespace choqdist;

void BM_GridReference(benchmark::State& state) {
  const Capacity v = testing::random_monotone_capacity(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::distribution_grid(v, {0.0, 1.0, 512}));
  }
}

void BM_GridParallel(benchmark::State& state) {
  const Capacity v = testing::random_monotone_capacity(state.range(0), 1);
  set_thread_count(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(distribution_grid(v, {0.0, 1.0, 512}));
  }
}

void BM_MomentsReference(benchmark::State& state) {
  const Capacity v = testing::random_capacity(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(reference::raw_moment(v, 4));
}

void BM_MomentsRanked(benchmark::State& state) {
  const Capacity v = testing::random_capacity(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(raw_moment(v, 4));
}

}  // namespace

BENCHMARK(BM_GridReference)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)
    ->ArgsProduct({{5, 6, 7, 8}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MomentsReference)->DenseRange(8, 14, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MomentsRanked)->DenseRange(8, 14, 3)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
