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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "svsim/circuitgen.h"

namespace svsim {
namespace {

std::vector<BenchmarkRecord> SampleRecords() {
  return {{"supremacy", 10, 21, 80, "kernel", 4, 0, 1.0},
          {"supremacy", 10, 21, 80, "kernel", 4, 1, 3.0},
          {"supremacy", 10, 21, 80, "dense", 4, 0, 8.0},
          {"supremacy", 10, 21, 80, "dense", 4, 1, 8.0},
          {"supremacy", 11, 21, 90, "kernel", 4, 0, 0.1}};
}

TEST(RunBenchmark, DefaultTenRecordsPerPair) {
  const std::vector<Circuit> circuits = {GenerateSupremacy({2, 2, 3, 1}),
                                         GenerateMultiplier({1})};
  KernelBackend kernel(1);
  DenseBackend dense;
  const std::vector<const Backend*> backends = {&kernel, &dense};
  int seen = 0;
  HarnessOptions options;
  options.on_record = [&](const BenchmarkRecord&) { ++seen; };
  const BenchmarkResult result = RunBenchmark(circuits, backends, options);
  EXPECT_EQ(result.records.size(), 40u);
  EXPECT_EQ(seen, 40);
  EXPECT_TRUE(result.failures.empty());
  for (const auto& row : Aggregate(result.records)) {
    EXPECT_EQ(row.repetitions, kDefaultRepetitions);
    EXPECT_GT(row.mean_seconds, 0.0);
  }
  EXPECT_EQ(result.records[0].seed, 1u);
  EXPECT_EQ(result.records[0].depth, 7);
}

TEST(RunBenchmark, OversizedWidthBecomesFailure) {
  const std::vector<Circuit> circuits = {Circuit(20)};
  KernelBackend kernel(1);
  const std::vector<const Backend*> backends = {&kernel};
  HarnessOptions options;
  options.max_state_bytes = ByteCount{1} << 20;
  const BenchmarkResult result = RunBenchmark(circuits, backends, options);
  EXPECT_TRUE(result.records.empty());
  ASSERT_EQ(result.failures.size(), 1u);
  EXPECT_NE(result.failures[0].reason.find("MiB"), std::string::npos);
}

TEST(Aggregate, MeanAndSampleStddev) {
  const auto rows = Aggregate(SampleRecords());
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].backend, "kernel");
  EXPECT_DOUBLE_EQ(rows[0].mean_seconds, 2.0);
  EXPECT_DOUBLE_EQ(rows[0].stddev_seconds, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(rows[1].stddev_seconds, 0.0);
  EXPECT_EQ(rows[2].repetitions, 1);
  EXPECT_THROW(Aggregate({}), std::invalid_argument);
}

TEST(Speedup, RatiosAndMissingPairs) {
  auto rows = Aggregate(SampleRecords());
  rows.pop_back();
  const auto s = Speedup(rows, "dense", "kernel");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_DOUBLE_EQ(s[0].ratio, 4.0);
  for (const auto& self : Speedup(rows, "kernel", "kernel")) {
    EXPECT_EQ(self.ratio, 1.0);
  }
  EXPECT_THROW(Speedup(Aggregate(SampleRecords()), "dense", "kernel"),
               std::invalid_argument);
}

TEST(Csv, RoundTrips) {
  const auto records = SampleRecords();
  std::stringstream rs;
  WriteRecordsCsv(rs, records);
  EXPECT_EQ(ParseRecordsCsv(rs), records);

  const auto rows = Aggregate(records);
  std::stringstream as;
  WriteAggregatesCsv(as, rows);
  EXPECT_EQ(ParseAggregatesCsv(as), rows);

  const std::vector<SpeedupRow> speedups = {{"multiplier", 9, "dense", "kernel", 0.1}};
  std::stringstream ss;
  WriteSpeedupsCsv(ss, speedups);
  EXPECT_EQ(ParseSpeedupsCsv(ss), speedups);
}

TEST(Csv, ErrorsNameTheLine) {
  std::stringstream bad(std::string(kRecordHeader) +
                        "\nsupremacy,10,21,80,kernel,4,0,1\nsupremacy,x,1,1,k,1,1,1\n");
  try {
    ParseRecordsCsv(bad);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::stringstream no_header("a,b\n");
  EXPECT_THROW(ParseAggregatesCsv(no_header), std::runtime_error);
}

TEST(PlotData, OneSeriesPerFamilyAndBackend) {
  const auto dir = std::filesystem::temp_directory_path() / "svsim_plot_test";
  std::filesystem::remove_all(dir);
  const auto files = WritePlotData(dir, Aggregate(SampleRecords()), "run_");
  ASSERT_EQ(files.size(), 2u);
  std::ifstream in(dir / "run_supremacy_kernel.tsv");
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "width\tmean_seconds\n10\t2\n11\t0.1\n");
  std::filesystem::remove_all(dir);
}

TEST(SweepCircuits, OneCircuitPerWidth) {
  SweepBenchmarkConfig config;
  config.min_width = 5;
  config.max_width = 10;
  config.depth = 2;
  config.seed = 9;
  const auto circuits = SweepCircuits(config);
  ASSERT_EQ(circuits.size(), 6u);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(circuits[i].num_qubits(), 5 + i);
  EXPECT_EQ(SweepCircuits(config), circuits);

  config.family = CircuitFamily::kMultiplier;
  for (const Circuit& c : SweepCircuits(config)) {
    EXPECT_EQ(c.family(), CircuitFamily::kMultiplier);
  }
  config.min_width = 11;
  EXPECT_THROW(SweepCircuits(config), std::invalid_argument);
}

TEST(TimeCall, AlwaysPositive) {
  EXPECT_GT(TimeCall([] {}), 0.0);
}

}  // namespace
}  // namespace svsim
