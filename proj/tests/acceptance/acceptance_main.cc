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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and bounds are fixed here on purpose.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "svsim/svsim.h"

namespace svsim {
namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

StateVector RandomNormalState(int n, Rng& rng) {
  std::vector<Amplitude> amps(std::size_t{1} << n);
  double norm = 0;
  for (auto& a : amps) {
    a = {rng.Normal(), rng.Normal()};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector(n, std::move(amps));
}

double MeanSeconds(const BenchmarkResult& result) {
  const auto rows = Aggregate(result.records);
  return rows.front().mean_seconds;
}

Outcome BackendEquivalence() {
  Rng rng(20240601);
  double worst = 0;
  const int workers = KernelBackend::DefaultWorkers();
  for (int i = 0; i < 200; ++i) {
    RandomCircuitSpec spec;
    spec.num_qubits = 2 + static_cast<int>(rng.UniformBelow(9));
    spec.depth = 1 + static_cast<int>(rng.UniformBelow(30));
    spec.seed = rng.Next();
    const Circuit c = RandomCircuit(spec);
    const auto report = CompareBackends(c, RandomNormalState(spec.num_qubits, rng),
                                        1e-10, workers);
    worst = std::max(worst, report.max_abs_diff);
    if (!report.pass) {
      return {false, "instance " + std::to_string(i) + " (n=" +
                         std::to_string(spec.num_qubits) + ") diff " +
                         Fmt(report.max_abs_diff)};
    }
  }
  return {true, "200 circuits, max |kernel - dense| = " + Fmt(worst)};
}

Outcome MultiplierTruthTables() {
  std::int64_t cases = 0;
  for (int n = 1; n <= 3; ++n) {
    const MultiplierVerification v = VerifyMultiplier(n);
    cases += v.cases_checked;
    if (!v.pass()) {
      const auto& cx = *v.counterexample;
      return {false, "n=" + std::to_string(n) + " a=" + std::to_string(cx.input.a) +
                         " b=" + std::to_string(cx.input.b) + ": " + cx.reason};
    }
  }
  return {cases == 4 + 16 + 64, std::to_string(cases) + " exhaustive cases"};
}

Outcome WidthFormula() {
  double fitted = 0;
  for (int n = 1; n <= 7; ++n) {
    const Circuit c = GenerateMultiplier({n});
    if (c.num_qubits() != 4 * n + 1) {
      return {false, "n=" + std::to_string(n) + " width " +
                         std::to_string(c.num_qubits())};
    }
    fitted = std::max(fitted, static_cast<double>(c.depth()) / (n * n));
  }
  return {fitted <= kMultiplierDepthConstant,
          "width 4n+1 for n=1..7; max depth/n^2 = " + Fmt(fitted) +
              " <= c = " + std::to_string(kMultiplierDepthConstant)};
}

Outcome MemoryEstimator() {
  const ByteCount bytes = MemoryEstimate(42);
  return {bytes == ByteCount{70368744177664ULL} && bytes == (ByteCount{64} << 40),
          "42 qubits -> " + FormatBytes(bytes)};
}

Outcome NormPreservation() {
  const Circuit c = GenerateSupremacy({5, 4, 20, 7});
  const StateVector out = Simulate(KernelBackend(), c, ZeroState(20));
  const double err = std::abs(Norm(out) - 1.0);
  return {err <= 1e-9, "20 qubits, 20 cycles: |norm - 1| = " + Fmt(err)};
}

Outcome LinearInGates() {
  KernelBackend kernel;
  const std::vector<const Backend*> backends = {&kernel};
  HarnessOptions options;  // 10 repetitions
  const Circuit shallow = GenerateSupremacy({5, 4, 20, 3});
  const Circuit deep = GenerateSupremacy({5, 4, 40, 3});
  const double t20 = MeanSeconds(RunBenchmark({&shallow, 1}, backends, options));
  const double t40 = MeanSeconds(RunBenchmark({&deep, 1}, backends, options));
  const double ratio = t40 / t20;
  return {ratio >= 1.5 && ratio <= 2.5,
          "n=20 depth 40 / depth 20 = " + Fmt(ratio) + " (" + Fmt(t40) + "s / " +
              Fmt(t20) + "s)"};
}

Outcome ExponentialInWidth() {
  SweepBenchmarkConfig config;
  config.min_width = 18;
  config.max_width = 24;
  config.depth = 4;
  config.seed = 11;
  KernelBackend kernel;
  const std::vector<const Backend*> backends = {&kernel};
  HarnessOptions options;
  const BenchmarkResult result = SweepBenchmark(config, backends, options);
  if (!result.failures.empty()) return {false, result.failures[0].reason};
  const auto rows = Aggregate(result.records);
  bool pass = true;
  std::ostringstream detail;
  detail << "ratios";
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double ratio = rows[i + 1].mean_seconds / rows[i].mean_seconds;
    pass = pass && ratio >= 1.5 && ratio <= 3.0;
    detail << ' ' << rows[i].width << "->" << rows[i + 1].width << '=' << Fmt(ratio);
  }
  return {pass && rows.size() == 7, detail.str()};
}

Outcome SweepIntegrity() {
  const Circuit base = GenerateSupremacy({7, 4, 20, 5});
  const SweepPlan plan = WidthSweep(base, 13, 99);
  if (base.num_qubits() != 28 || plan.circuits.size() != 15) {
    return {false, std::to_string(plan.circuits.size()) + " circuits"};
  }
  const Circuit* previous = &base;
  for (std::size_t i = 0; i < plan.circuits.size(); ++i) {
    const Circuit& c = plan.circuits[i];
    if (c.num_qubits() != previous->num_qubits() - 1 ||
        c.num_qubits() != 27 - static_cast<int>(i)) {
      return {false, "width " + std::to_string(c.num_qubits()) + " at step " +
                         std::to_string(i)};
    }
    // Independent nesting check: drop the removed qubit's gates from the
    // previous circuit, relabel, and compare gate sequences.
    const int removed = plan.removed[i];
    std::vector<int> mapping(previous->num_qubits());
    for (int q = 0; q < previous->num_qubits(); ++q) {
      mapping[q] = q < removed ? q : q - 1;
    }
    std::vector<Gate> expected;
    for (const Gate& g : FlattenGates(*previous)) {
      if (!g.Touches(removed)) expected.push_back(g.Remapped(mapping));
    }
    if (expected != FlattenGates(c)) {
      return {false, "gates not nested at width " + std::to_string(c.num_qubits())};
    }
    previous = &c;
  }
  return {true, "15 widths 27..13, strictly decreasing, gate sets nested"};
}

Outcome PathSumAgreement() {
  Rng rng(31337);
  double worst = 0;
  int cases = 0;
  while (cases < 50) {
    RandomCircuitSpec spec;
    spec.num_qubits = 1 + static_cast<int>(rng.UniformBelow(5));
    spec.depth = 1 + static_cast<int>(rng.UniformBelow(8));
    spec.seed = rng.Next();
    const Circuit c = RandomCircuit(spec);
    if (c.gate_count() > 20 || PathSumBranchingBits(c) > 22) continue;
    const BasisIndex dim = BasisIndex{1} << spec.num_qubits;
    const BasisIndex in = rng.UniformBelow(dim);
    const BasisIndex out = rng.UniformBelow(dim);
    std::vector<Amplitude> amps(dim);
    amps[in] = 1.0;
    const StateVector full =
        Simulate(KernelBackend(1), c, StateVector(spec.num_qubits, std::move(amps)));
    worst = std::max(worst, std::abs(PathSumAmplitude(c, in, out) -
                                     BasisAmplitude(full, out)));
    ++cases;
  }
  return {worst <= 1e-9, "50 circuits, max |path sum - amplitude| = " + Fmt(worst)};
}

Outcome HarnessMethodology() {
  const std::vector<Circuit> circuits = {GenerateSupremacy({3, 3, 4, 1}),
                                         GenerateMultiplier({2})};
  KernelBackend kernel;
  DenseBackend dense;
  const std::vector<const Backend*> backends = {&kernel, &dense};
  const BenchmarkResult result = RunBenchmark(circuits, backends);
  const auto rows = Aggregate(result.records);
  bool pass = result.failures.empty() && rows.size() == 4;
  for (const auto& row : rows) pass = pass && row.repetitions == 10;

  std::stringstream rcsv, acsv, scsv;
  WriteRecordsCsv(rcsv, result.records);
  WriteAggregatesCsv(acsv, rows);
  const auto self = Speedup(rows, "kernel", "kernel");
  WriteSpeedupsCsv(scsv, self);
  pass = pass && ParseRecordsCsv(rcsv) == result.records &&
         ParseAggregatesCsv(acsv) == rows && ParseSpeedupsCsv(scsv) == self;
  for (const auto& s : self) pass = pass && s.ratio == 1.0;
  pass = pass && self.size() == 2;
  return {pass, std::to_string(result.records.size()) +
                    " records over 4 (circuit, backend) pairs; CSV round trip; "
                    "self speedup 1"};
}

Outcome Determinism() {
  const int max_workers = KernelBackend::DefaultWorkers();
  bool pass = true;
  std::vector<Circuit> circuits;
  for (int round = 0; round < 2; ++round) {
    std::vector<Circuit> now = {GenerateSupremacy({4, 4, 12, 77}),
                                GenerateMultiplier({3}),
                                RandomCircuit({14, 20, 5, 0.1}),
                                WidthSweep(GenerateSupremacy({4, 4, 8, 1}), 15, 3)
                                    .circuits.back()};
    if (round == 1) pass = pass && now == circuits;
    circuits = std::move(now);
  }
  for (const Circuit& c : circuits) {
    const int n = c.num_qubits();
    const StateVector reference =
        Simulate(KernelBackend(1), c, EqualSuperpositionState(n));
    for (int workers : {1, 2, max_workers}) {
      for (int repeat = 0; repeat < 2; ++repeat) {
        const StateVector s =
            Simulate(KernelBackend(workers), c, EqualSuperpositionState(n));
        pass = pass && BitIdentical(reference, s);
      }
    }
  }
  return {pass, "circuits regenerate identically; states bit-identical for "
                "workers 1, 2, " + std::to_string(max_workers)};
}

}  // namespace
}  // namespace svsim

int main(int argc, char** argv) {
  // Optional arguments select criteria by name.
  const std::vector<std::string> only(argv + 1, argv + argc);
  using svsim::Outcome;
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
    double time_limit_seconds;  // 0: unbounded
  };
  const std::vector<Criterion> criteria = {
      {"backend_equivalence", svsim::BackendEquivalence, 120},
      {"multiplier_truth_tables", svsim::MultiplierTruthTables, 300},
      {"multiplier_width_formula", svsim::WidthFormula, 0},
      {"memory_estimator", svsim::MemoryEstimator, 0},
      {"norm_preservation", svsim::NormPreservation, 0},
      {"linear_in_gates", svsim::LinearInGates, 600},
      {"exponential_in_width", svsim::ExponentialInWidth, 0},
      {"sweep_integrity", svsim::SweepIntegrity, 0},
      {"pathsum_agreement", svsim::PathSumAgreement, 0},
      {"harness_methodology", svsim::HarnessMethodology, 0},
      {"determinism", svsim::Determinism, 0},
  };
  int failed = 0;
  int ran = 0;
  for (const auto& [name, check, limit] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) {
      continue;
    }
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && seconds > limit) {
      outcome.pass = false;
      outcome.detail += "; exceeded the " + svsim::Fmt(limit) + "s budget";
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << ": " << outcome.detail
              << " [" << svsim::Fmt(seconds) << "s]" << std::endl;
  }
  std::cout << (ran - failed) << "/" << ran
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
