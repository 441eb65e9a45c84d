// Copyright 2026 The cavity-cswap Authors
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

#include <benchmark/benchmark.h>

#include "cswap/cavity.hpp"
#include "cswap/channel.hpp"
#include "cswap/pulse.hpp"
#include "cswap/statevector.hpp"
#include "cswap/synthesis.hpp"

namespace {

using namespace cswap;

void BM_Response(benchmark::State& state) {
  const auto params = CavityParams::symmetric(7.6, 1.0, 0.62);
  double omega = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(response(params, Polarization::H, AtomBranch::Coupled, omega));
    omega = omega > 3.0 ? -3.0 : omega + 1e-3;
  }
}
BENCHMARK(BM_Response);

void BM_Overlaps(benchmark::State& state) {
  const auto params = CavityParams::symmetric(7.6, 1.0, 0.62);
  QuadratureConfig quad;
  quad.node_count = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(overlaps(params, PulseSpec{0.1}, quad));
  }
}
BENCHMARK(BM_Overlaps)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_OverlapsSimpson(benchmark::State& state) {
  const auto params = CavityParams::symmetric(7.6, 1.0, 0.62);
  QuadratureConfig quad;
  quad.method = QuadratureMethod::AdaptiveSimpson;
  for (auto _ : state) {
    benchmark::DoNotOptimize(overlaps(params, PulseSpec{0.1}, quad));
  }
}
BENCHMARK(BM_OverlapsSimpson)->Unit(benchmark::kMicrosecond);

void BM_SwapTest(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const auto psi = random_state(n, rng);
  const auto phi = random_state(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(swap_test(psi, phi));
}
BENCHMARK(BM_SwapTest)->DenseRange(2, 8, 2);

void BM_NoisyCswap(benchmark::State& state) {
  const auto model = build_model(CavityParams::symmetric(7.6, 1.0, 0.62), PulseSpec{0.1});
  const auto input = typical_input();
  for (auto _ : state) benchmark::DoNotOptimize(fidelity(apply_noisy_cswap(input, model)));
}
BENCHMARK(BM_NoisyCswap)->Unit(benchmark::kMicrosecond);

void BM_SynthesizeCzz(benchmark::State& state) {
  SynthesisOptions options;
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(SynthesisTarget::czz(), options));
}
BENCHMARK(BM_SynthesizeCzz)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
