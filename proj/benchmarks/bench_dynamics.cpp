// Copyright 2026 The tcqed Authors
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

#include "tcqed/dynamics.hpp"
#include "tcqed/hilbert.hpp"
#include "tcqed/measures.hpp"
#include "tcqed/protocol.hpp"
#include "tcqed/reduced.hpp"
#include "tcqed/sweep.hpp"

namespace {

using namespace tcqed;

void BM_PropagatorBuild(benchmark::State& state) {
  const auto cutoff = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Propagator p(cutoff, DynamicsConfig{});
    benchmark::DoNotOptimize(p.block_count());
  }
}
BENCHMARK(BM_PropagatorBuild)->Arg(20)->Arg(61)->Arg(120);

void BM_Evolve(benchmark::State& state) {
  const auto field = coherent_amplitudes(20.0);
  const auto psi0 = initial_state(AtomicInit::from_real(0.5), field, 2);
  const Propagator p(psi0.cutoff(), DynamicsConfig{});
  double tau = 0.0;
  for (auto _ : state) {
    tau += 0.05;
    benchmark::DoNotOptimize(p.evolve(psi0, tau));
  }
}
BENCHMARK(BM_Evolve);

void BM_Measures(benchmark::State& state) {
  const auto field = coherent_amplitudes(20.0);
  const auto psi0 = initial_state(AtomicInit::from_real(0.5), field, 2);
  const Propagator p(psi0.cutoff(), DynamicsConfig{});
  const auto rho = trace_field(p.evolve(psi0, 3.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(impurities(rho));
    benchmark::DoNotOptimize(ppt_report(rho));
    benchmark::DoNotOptimize(holevo_bound(rho));
    benchmark::DoNotOptimize(disturbance(rho));
  }
}
BENCHMARK(BM_Measures);

void BM_Fig2Sweep(benchmark::State& state) {
  SweepConfig config = figure_preset("fig2");
  config.outputs = {OutputGroup::kPurity, OutputGroup::kPpt,
                    OutputGroup::kFidelity, OutputGroup::kCoding,
                    OutputGroup::kSecurity};
  config.attack = Attack::kAll;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(config));
}
BENCHMARK(BM_Fig2Sweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
