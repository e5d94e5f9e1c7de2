// Copyright 2026 The svsim Authors
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

#include "svsim/svsim.h"

namespace svsim {
namespace {

// Arguments: {gate kind, qubits}. Targets sit in the middle of the index so
// both the low and high stride paths are exercised.
void BM_ApplyGate(benchmark::State& state) {
  const auto kind = static_cast<GateKind>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::vector<int> targets = {n / 2, 0, n - 1};
  targets.resize(FixedArity(kind));
  const Gate gate(kind, targets);
  StateVector s = EqualSuperpositionState(n);
  const KernelBackend kernel(1);
  for (auto _ : state) {
    kernel.Apply(s, gate);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetLabel(std::string(GateKindName(kind)));
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(MemoryEstimate(n)));
}
BENCHMARK(BM_ApplyGate)
    ->ArgsProduct({{static_cast<int>(GateKind::kX), static_cast<int>(GateKind::kH),
                    static_cast<int>(GateKind::kT), static_cast<int>(GateKind::kCZ),
                    static_cast<int>(GateKind::kCNOT),
                    static_cast<int>(GateKind::kToffoli)},
                   {12, 20}});

void BM_ApplyCustom(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng(1);
  std::vector<int> targets = {3, 9, 15};
  targets.resize(k);
  const Gate gate(RandomUnitary(k, rng), targets);
  StateVector s = EqualSuperpositionState(20);
  const KernelBackend kernel(1);
  for (auto _ : state) {
    kernel.Apply(s, gate);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_ApplyCustom)->DenseRange(1, 3);

void BM_SimulateSupremacy(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const Circuit c = GenerateSupremacy({rows, 4, 20, 0});
  const KernelBackend kernel;
  for (auto _ : state) {
    StateVector out = Simulate(kernel, c, EqualSuperpositionState(c.num_qubits()));
    benchmark::DoNotOptimize(out.amplitudes().data());
  }
  state.counters["qubits"] = c.num_qubits();
  state.counters["gates"] = static_cast<double>(c.gate_count());
}
BENCHMARK(BM_SimulateSupremacy)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_DenseMoment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circuit c = GenerateSupremacy({n / 2, 2, 1, 0});
  const DenseBackend dense;
  StateVector s = EqualSuperpositionState(n);
  for (auto _ : state) {
    dense.ApplyMoment(s, c.moments()[1]);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_DenseMoment)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace svsim

BENCHMARK_MAIN();
