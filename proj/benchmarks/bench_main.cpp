// Copyright 2026 The xyphase Authors
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

#include "xyphase/exact_spectrum.hpp"
#include "xyphase/ramp.hpp"
#include "xyphase/trotter.hpp"

namespace {

using namespace xyphase;

void BM_DenseDiagonalize(benchmark::State& state) {
  const HamiltonianSpec spec{static_cast<int>(state.range(0)), 1.0, 0.7, 0.05,
                             true};
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(spec));
}
BENCHMARK(BM_DenseDiagonalize)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_MomentumGap(benchmark::State& state) {
  const HamiltonianSpec spec{static_cast<int>(state.range(0)), 1.0, 0.0, 0.05,
                             true};
  const MomentumBlocks blocks(spec);
  double bz = 0.0;
  for (auto _ : state) {
    const auto e = blocks.eigenvalues(bz);
    benchmark::DoNotOptimize(e(1) - e(0));
    bz += 1e-3;
  }
}
BENCHMARK(BM_MomentumGap)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_LocalRamp(benchmark::State& state) {
  const HamiltonianSpec spec{static_cast<int>(state.range(0)), 1.0, 0.0, 0.02,
                             true};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_local_ramp(spec, 2.0, 2.0, 0.0, 50));
  }
}
BENCHMARK(BM_LocalRamp)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Evolve(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  const auto backend = state.range(1) ? Backend::GateLevel
                                      : Backend::ExactExponential;
  const HamiltonianSpec spec{sites, 1.0, 0.0, 0.05, true};
  RampSchedule s;
  s.bx = spec.bx;
  s.dt = 0.1;
  for (int k = 0; k <= 200; ++k) s.steps.push_back({0.1 * k, 1.5 - 0.0075 * k});
  s.total_time = 20.0;
  EvolveOptions opts;
  opts.backend = backend;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(StateVector::all_up(sites), s, spec, opts));
  }
}
BENCHMARK(BM_Evolve)
    ->ArgsProduct({{2, 6, 10}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
