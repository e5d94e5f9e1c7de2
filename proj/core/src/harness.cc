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


#include "svsim/harness.h"

#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

#include "svsim/circuitgen.h"

namespace svsim {
namespace {

constexpr std::int64_t kMinTimedTicks = 100;

using GroupKey = std::tuple<std::string, int, std::string>;

Circuit SweepBase(const SweepBenchmarkConfig& config, int width) {
  switch (config.family) {
    case CircuitFamily::kSupremacy:
      return GenerateSupremacy(SmallestGridFor(width, config.depth, config.seed));
    case CircuitFamily::kMultiplier: {
      const int bits = std::max(1, (width - 1 + 3) / 4);
      Circuit base = GenerateMultiplier({bits});
      base.SetMetadata("seed", std::to_string(config.seed));
      return base;
    }
    case CircuitFamily::kCustom:
      break;
  }
  throw std::invalid_argument("width sweeps need the supremacy or multiplier family");
}

}  // namespace

std::uint64_t RecordSeed(const Circuit& circuit) {
  for (const char* key : {"seed", "sweep_seed"}) {
    if (auto value = circuit.GetMetadata(key)) {
      try {
        return std::stoull(*value);
      } catch (const std::exception&) {
        // not a number; try the next key
      }
    }
  }
  return 0;
}

double TimeCall(const std::function<void()>& run) {
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  run();
  auto elapsed = Clock::now() - start;
  if (elapsed.count() >= kMinTimedTicks) {
    return std::chrono::duration<double>(elapsed).count();
  }
  std::int64_t calls = 1;
  while (elapsed.count() < kMinTimedTicks) {
    calls *= 2;
    start = Clock::now();
    for (std::int64_t i = 0; i < calls; ++i) run();
    elapsed = Clock::now() - start;
  }
  return std::chrono::duration<double>(elapsed).count() /
         static_cast<double>(calls);
}

BenchmarkResult RunBenchmark(std::span<const Circuit> circuits,
                             std::span<const Backend* const> backends,
                             const HarnessOptions& options) {
  if (options.repetitions < 1) {
    throw std::invalid_argument("repetitions must be at least 1");
  }
  BenchmarkResult result;
  for (const Circuit& circuit : circuits) {
    const int width = circuit.num_qubits();
    const std::string family(FamilyName(circuit.family()));
    for (const Backend* backend : backends) {
      const std::string backend_name(backend->name());
      auto fail = [&](const std::string& reason) {
        result.failures.push_back({family, width, backend_name, reason});
      };
      const ByteCount needed = MemoryEstimate(width);
      if (needed > options.max_state_bytes) {
        fail("resource: " + std::to_string(width) + "-qubit state needs " +
             FormatBytes(needed) + ", limit " +
             FormatBytes(options.max_state_bytes));
        continue;
      }
      std::optional<StateVector> final_state;
      const auto run = [&] {
        final_state = Simulate(*backend, circuit, EqualSuperpositionState(width));
      };
      try {
        if (options.warmup) run();
        for (int rep = 0; rep < options.repetitions; ++rep) {
          const double seconds = TimeCall(run);
          BenchmarkRecord record{family,       width,        circuit.depth(),
                                 circuit.gate_count(), backend_name,
                                 RecordSeed(circuit), rep, seconds};
          if (options.on_record) options.on_record(record);
          result.records.push_back(std::move(record));
          final_state.reset();
        }
      } catch (const ResourceError& e) {
        fail(std::string("resource: ") + e.what());
      }
    }
  }
  return result;
}

std::vector<AggregateRow> Aggregate(std::span<const BenchmarkRecord> records) {
  if (records.empty()) throw std::invalid_argument("no records to aggregate");
  std::map<GroupKey, std::size_t> index;
  std::vector<std::vector<double>> samples;
  std::vector<AggregateRow> rows;
  for (const BenchmarkRecord& r : records) {
    const GroupKey key{r.family, r.width, r.backend};
    auto [it, inserted] = index.emplace(key, rows.size());
    if (inserted) {
      rows.push_back({r.family, r.width, r.backend, 0, 0.0, 0.0});
      samples.emplace_back();
    }
    samples[it->second].push_back(r.seconds);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& s = samples[i];
    double sum = 0.0;
    for (double x : s) sum += x;
    const double mean = sum / static_cast<double>(s.size());
    double sq = 0.0;
    for (double x : s) sq += (x - mean) * (x - mean);
    rows[i].repetitions = static_cast<int>(s.size());
    rows[i].mean_seconds = mean;
    rows[i].stddev_seconds =
        s.size() > 1 ? std::sqrt(sq / static_cast<double>(s.size() - 1)) : 0.0;
  }
  return rows;
}

std::vector<SpeedupRow> Speedup(std::span<const AggregateRow> rows,
                                std::string_view baseline,
                                std::string_view subject) {
  std::map<std::pair<std::string, int>, const AggregateRow*> base_rows;
  std::map<std::pair<std::string, int>, const AggregateRow*> subject_rows;
  std::vector<std::pair<std::string, int>> order;
  for (const AggregateRow& row : rows) {
    const auto key = std::make_pair(row.family, row.width);
    if (row.backend == baseline) {
      if (base_rows.emplace(key, &row).second) order.push_back(key);
    }
    if (row.backend == subject) subject_rows.emplace(key, &row);
  }
  for (const auto& [key, row] : subject_rows) {
    if (!base_rows.contains(key)) {
      throw std::invalid_argument("no " + std::string(baseline) + " row for " +
                                  key.first + " width " +
                                  std::to_string(key.second));
    }
  }
  std::vector<SpeedupRow> out;
  for (const auto& key : order) {
    auto it = subject_rows.find(key);
    if (it == subject_rows.end()) {
      throw std::invalid_argument("no " + std::string(subject) + " row for " +
                                  key.first + " width " +
                                  std::to_string(key.second));
    }
    out.push_back({key.first, key.second, std::string(baseline),
                   std::string(subject),
                   base_rows[key]->mean_seconds / it->second->mean_seconds});
  }
  return out;
}

std::vector<Circuit> SweepCircuits(const SweepBenchmarkConfig& config) {
  if (config.min_width < 1 || config.min_width > config.max_width) {
    throw std::invalid_argument("invalid width range " +
                                std::to_string(config.min_width) + ".." +
                                std::to_string(config.max_width));
  }
  std::vector<Circuit> circuits;
  for (int width = config.min_width; width <= config.max_width; ++width) {
    Circuit base = SweepBase(config, width);
    if (base.num_qubits() == width) {
      circuits.push_back(std::move(base));
      continue;
    }
    const std::uint64_t sweep_seed =
        MixSeed(config.seed ^ (static_cast<std::uint64_t>(width) << 32));
    SweepPlan plan = WidthSweep(base, width, sweep_seed);
    circuits.push_back(std::move(plan.circuits.back()));
  }
  return circuits;
}

BenchmarkResult SweepBenchmark(const SweepBenchmarkConfig& config,
                               std::span<const Backend* const> backends,
                               const HarnessOptions& options) {
  const std::vector<Circuit> circuits = SweepCircuits(config);
  return RunBenchmark(circuits, backends, options);
}

}  // namespace svsim
