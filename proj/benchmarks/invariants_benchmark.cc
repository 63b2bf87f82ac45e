// Copyright 2023 The Authors.
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

#include "mcone/catalog.h"
#include "mcone/cone.h"
#include "mcone/invariants.h"

namespace mcone {
namespace {

// Sources of 6, 7, 7 and 9 elements; G is bounded by the permutation limit.
Matroid GSource(int index) {
  switch (index) {
    case 0:
      return TwoDisjointLines();
    case 1:
      return DoubledPointK4();
    case 2:
      return FreeMCone(Matroid::Uniform(2, 3), 1).matroid();
    default:
      return FreeMCone(Matroid::Uniform(2, 4), 1).matroid();
  }
}

void BM_GInvariant(benchmark::State& state) {
  const Matroid m = GSource(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeGInvariant(m));
  }
  state.SetLabel(std::to_string(m.size()) + " elements");
}
BENCHMARK(BM_GInvariant)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CatenaryData(benchmark::State& state) {
  const Matroid q = FreeMCone(TwoDisjointLines(), static_cast<int>(state.range(0))).matroid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeCatenaryData(q));
  }
  state.SetLabel(std::to_string(q.size()) + " elements");
}
BENCHMARK(BM_CatenaryData)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Tutte(benchmark::State& state) {
  const Matroid q = FreeMCone(TwoDisjointLines(), static_cast<int>(state.range(0))).matroid();
  Limits limits;
  limits.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeTutte(q, limits));
  }
  state.SetLabel(std::to_string(q.size()) + " elements");
}
BENCHMARK(BM_Tutte)->Args({1, 1})->Args({2, 1})->Args({2, 4})->Unit(benchmark::kMillisecond);

void BM_Flags(benchmark::State& state) {
  const Matroid q = FreeMCone(TwoMeetingLines(), static_cast<int>(state.range(0))).matroid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Flags(q));
  }
}
BENCHMARK(BM_Flags)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mcone

BENCHMARK_MAIN();
