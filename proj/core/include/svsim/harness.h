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


#ifndef SVSIM_HARNESS_H_
#define SVSIM_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "svsim/backend.h"
#include "svsim/circuit.h"

namespace svsim {

inline constexpr int kDefaultRepetitions = 10;
inline constexpr int kDefaultMinWidth = 13;
inline constexpr int kDefaultMaxWidth = 28;

// One timed simulation.
struct BenchmarkRecord {
  std::string family;
  int width = 0;
  int depth = 0;
  std::int64_t gate_count = 0;
  std::string backend;
  std::uint64_t seed = 0;
  int rep = 0;
  double seconds = 0.0;

  friend bool operator==(const BenchmarkRecord&, const BenchmarkRecord&) = default;
};

// A (circuit, backend) pair that could not be run.
struct FailedRun {
  std::string family;
  int width = 0;
  std::string backend;
  std::string reason;
};

struct BenchmarkResult {
  std::vector<BenchmarkRecord> records;
  std::vector<FailedRun> failures;
};

struct HarnessOptions {
  int repetitions = kDefaultRepetitions;
  // One untimed run per (circuit, backend) before the timed repetitions.
  bool warmup = true;
  // States larger than this are reported as failed runs without allocating.
  ByteCount max_state_bytes = PhysicalMemoryBytes();
  // Called after every timed record; useful for progress output.
  std::function<void(const BenchmarkRecord&)> on_record;
};

// Seed recorded for a circuit: meta `seed`, else `sweep_seed`, else 0.
std::uint64_t RecordSeed(const Circuit& circuit);

// Wall time in seconds of `run` on a monotonic clock. Calls shorter than
// 100 clock ticks are repeated in a doubling loop and the total divided by
// the call count, so the result is always positive.
double TimeCall(const std::function<void()>& run);

// For every circuit and backend: optional warm-up, then `repetitions` timed
// runs of (allocate equal superposition state + Simulate). Circuit
// construction is outside the timed region. Resource errors become
// FailedRun entries. Runs are strictly sequential.
BenchmarkResult RunBenchmark(std::span<const Circuit> circuits,
                             std::span<const Backend* const> backends,
                             const HarnessOptions& options = {});

struct AggregateRow {
  std::string family;
  int width = 0;
  std::string backend;
  int repetitions = 0;
  double mean_seconds = 0.0;
  double stddev_seconds = 0.0;  // sample (n - 1) standard deviation

  friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

// One row per (family, width, backend), in first-appearance order.
std::vector<AggregateRow> Aggregate(std::span<const BenchmarkRecord> records);

struct SpeedupRow {
  std::string family;
  int width = 0;
  std::string baseline;
  std::string subject;
  double ratio = 0.0;  // mean(baseline) / mean(subject)

  friend bool operator==(const SpeedupRow&, const SpeedupRow&) = default;
};

// Throws std::invalid_argument when a (family, width) present for one
// backend is missing for the other.
std::vector<SpeedupRow> Speedup(std::span<const AggregateRow> rows,
                                std::string_view baseline,
                                std::string_view subject);

struct SweepBenchmarkConfig {
  CircuitFamily family = CircuitFamily::kSupremacy;
  int min_width = kDefaultMinWidth;
  int max_width = kDefaultMaxWidth;
  int depth = 20;  // supremacy cycles; ignored for multipliers
  std::uint64_t seed = 0;
};

// One circuit per integer width in [min_width, max_width]: the smallest
// generator instance at least that wide, reduced by WidthSweep when needed.
std::vector<Circuit> SweepCircuits(const SweepBenchmarkConfig& config);

BenchmarkResult SweepBenchmark(const SweepBenchmarkConfig& config,
                               std::span<const Backend* const> backends,
                               const HarnessOptions& options = {});

// --- CSV / TSV emission ------------------------------------------------------

inline constexpr std::string_view kRecordHeader =
    "family,width,depth,gate_count,backend,seed,rep,seconds";
inline constexpr std::string_view kAggregateHeader =
    "family,width,backend,repetitions,mean_seconds,stddev_seconds";
inline constexpr std::string_view kSpeedupHeader =
    "family,width,baseline,subject,ratio";

void WriteRecordsCsv(std::ostream& out, std::span<const BenchmarkRecord> records);
void WriteAggregatesCsv(std::ostream& out, std::span<const AggregateRow> rows);
void WriteSpeedupsCsv(std::ostream& out, std::span<const SpeedupRow> rows);

// Inverse of the writers. Throw std::runtime_error naming the bad line.
std::vector<BenchmarkRecord> ParseRecordsCsv(std::istream& in);
std::vector<AggregateRow> ParseAggregatesCsv(std::istream& in);
std::vector<SpeedupRow> ParseSpeedupsCsv(std::istream& in);

// Writes `<prefix><family>_<backend>.tsv` with "width\tmean_seconds" lines for
// each series, sorted by width. Returns the files written.
std::vector<std::filesystem::path> WritePlotData(
    const std::filesystem::path& directory, std::span<const AggregateRow> rows,
    std::string_view prefix = "");

}  // namespace svsim

#endif  // SVSIM_HARNESS_H_
