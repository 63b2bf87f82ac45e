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
#include "mcone/transfer.h"
#include "mcone/zlattice.h"

namespace mcone {
namespace {

void BM_FreeMCone(benchmark::State& state) {
  const Matroid m = DoubledPointK4();
  const int fiber = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(FreeMCone(m, fiber));
  }
}
BENCHMARK(BM_FreeMCone)->DenseRange(1, 5);

void BM_ConeConfiguration(benchmark::State& state) {
  const Matroid q = FreeMCone(DoubledPointK4(), static_cast<int>(state.range(0))).matroid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeConfiguration(q));
  }
}
BENCHMARK(BM_ConeConfiguration)->DenseRange(1, 3);

void BM_CatenaryOfCone(benchmark::State& state) {
  const CatenaryData source = ComputeCatenaryData(DoubledPointK4());
  const int fiber = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CatenaryOfCone(source, fiber, ConeVariant::kFull));
  }
}
BENCHMARK(BM_CatenaryOfCone)->DenseRange(1, 3);

void BM_TutteOfConeFromSrc(benchmark::State& state) {
  const SrcData src = ComputeSrcData(DoubledPointK4());
  const int fiber = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(TutteOfConeFromSrc(src, fiber, ConeVariant::kFull));
  }
}
BENCHMARK(BM_TutteOfConeFromSrc)->DenseRange(1, 3);

void BM_SrcFromG(benchmark::State& state) {
  const GInvariant g = ComputeGInvariant(DoubledPointTwoLines());
  for (auto _ : state) {
    benchmark::DoNotOptimize(SrcFromG(g));
  }
}
BENCHMARK(BM_SrcFromG);

void BM_Reconstruction(benchmark::State& state) {
  const auto kind = static_cast<ConeVariant>(state.range(0));
  const int fiber = MinReconstructionM(kind);
  const Configuration config =
      ComputeConfiguration(FreeMCone(DoubledPointK4(), fiber).Variant(kind));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ReconstructFromConeConfig(config, kind, fiber));
  }
  state.SetLabel(VariantName(kind));
}
BENCHMARK(BM_Reconstruction)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mcone

BENCHMARK_MAIN();
