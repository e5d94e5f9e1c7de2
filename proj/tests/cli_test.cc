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


#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "svsim/svsim.h"

namespace svsim::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "svsim");
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("svsim_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, Version) {
  const Result r = RunCli({"--version"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, std::string(kVersion) + "\n");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"simulate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"generate", "--out", Path("a"), "--bogus"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"generate", "--family", "qft", "--out", Path("a")}).code,
            kExitUsage);
  EXPECT_EQ(RunCli({"bench", "--widths", "9..3", "--out", Path("r.csv")}).code,
            kExitUsage);
  EXPECT_EQ(RunCli({"verify", "pathsum"}).code, kExitUsage);
}

TEST_F(CliTest, GenerateMatchesLibraryAndRefusesOverwrite) {
  const std::string file = Path("c.txt");
  const Result r = RunCli({"generate", "--rows", "3", "--cols", "2", "--depth",
                           "5", "--seed", "8", "--out", file});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ReadCircuitFile(file), GenerateSupremacy({3, 2, 5, 8}));
  EXPECT_EQ(RunCli({"generate", "--out", file}).code, kExitUsage);
  EXPECT_EQ(RunCli({"generate", "--out", file, "--force", "--family",
                    "multiplier", "--operand-bits", "2"})
                .code,
            kExitOk);
  EXPECT_EQ(ReadCircuitFile(file), GenerateMultiplier({2}));
}

TEST_F(CliTest, GenerateSweepWritesEveryWidth) {
  const Result r = RunCli({"generate", "--rows", "2", "--cols", "2", "--depth",
                           "3", "--sweep-to", "2", "--out", Path("s.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ReadCircuitFile(Path("s_w3.txt")).num_qubits(), 3);
  EXPECT_EQ(ReadCircuitFile(Path("s_w2.txt")).num_qubits(), 2);
}

TEST_F(CliTest, DumpAmplitudesMatchesLibraryBitExactly) {
  const Circuit c = RandomCircuit({5, 10, 6, 0.1});
  WriteCircuitFile(Path("r.txt"), c);
  const StateVector expected = Simulate(KernelBackend(1), c, ZeroState(5));
  const Result r =
      RunCli({"simulate", Path("r.txt"), "--dump-amplitudes", "--workers", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# index re im");
  BasisIndex index;
  std::string re, im;
  std::size_t count = 0;
  while (in >> index >> re >> im) {
    EXPECT_EQ(index, count);
    EXPECT_EQ(std::stod(re), expected[index].real());
    EXPECT_EQ(std::stod(im), expected[index].imag());
    ++count;
  }
  EXPECT_EQ(count, expected.size());
}

TEST_F(CliTest, SimulateSummaryAndErrors) {
  WriteCircuitFile(Path("g.txt"), GenerateSupremacy({2, 2, 2, 0}));
  const Result r = RunCli({"simulate", Path("g.txt"), "--backend", "dense",
                           "--initial", "superposition", "--top-k", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("backend: dense"), std::string::npos);
  EXPECT_NE(r.out.find("norm: 1"), std::string::npos);

  std::ofstream(Path("bad.txt")) << "qubits: 2\nX 7\n";
  const Result bad = RunCli({"simulate", Path("bad.txt")});
  EXPECT_EQ(bad.code, kExitRuntimeError);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(RunCli({"simulate", Path("missing.txt")}).code, kExitRuntimeError);
}

TEST_F(CliTest, WorkersFromEnvironment) {
  WriteCircuitFile(Path("g.txt"), GenerateSupremacy({2, 2, 2, 0}));
  setenv(kWorkersEnv, "zero", 1);
  EXPECT_EQ(RunCli({"simulate", Path("g.txt")}).code, kExitUsage);
  setenv(kWorkersEnv, "2", 1);
  EXPECT_EQ(RunCli({"simulate", Path("g.txt")}).code, kExitOk);
  unsetenv(kWorkersEnv);
}

TEST_F(CliTest, BenchWritesCsvs) {
  const Result r = RunCli(
      {"bench", "--widths", "4..5", "--depth", "2", "--backends", "kernel,dense",
       "--reps", "2", "--out", Path("r.csv"), "--aggregate-out", Path("a.csv"),
       "--speedup-out", Path("s.csv"), "--plot-dir", Path("plots")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream records(Path("r.csv"));
  EXPECT_EQ(ParseRecordsCsv(records).size(), 8u);
  std::ifstream speedups(Path("s.csv"));
  EXPECT_EQ(ParseSpeedupsCsv(speedups).size(), 2u);
  EXPECT_TRUE(fs::exists(Path("plots/supremacy_kernel.tsv")));
  // Existing outputs are protected.
  EXPECT_EQ(RunCli({"bench", "--widths", "4", "--out", Path("r.csv")}).code,
            kExitUsage);
}

TEST_F(CliTest, VerifyModes) {
  Result r = RunCli({"verify", "backends", "--rows", "2", "--cols", "3",
                     "--depth", "4", "--json", Path("b.json")});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_TRUE(fs::exists(Path("b.json")));

  r = RunCli({"verify", "pathsum", "--random", "5", "--seed", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;

  Circuit c(2);
  c.Append(Gate::H(0));
  c.Append(Gate::CNOT(0, 1));
  WriteCircuitFile(Path("bell.txt"), c);
  r = RunCli({"verify", "pathsum", "--file", Path("bell.txt"), "--in", "0",
              "--out-index", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;

  r = RunCli({"verify", "multiplier", "--operand-bits", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("16 case(s)"), std::string::npos);
  EXPECT_EQ(RunCli({"verify", "multiplier", "--operand-bits", "4"}).code, kExitUsage);
}

TEST_F(CliTest, VerifyBackendsFailsOnTightTolerance) {
  // A negative tolerance can never be met; the exit status must say so.
  const Result r = RunCli({"verify", "backends", "--rows", "2", "--cols", "2",
                           "--depth", "2", "--tolerance", "-1"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, WorkedExamples) {
  ASSERT_EQ(RunCli({"generate", "--family", "multiplier", "--operand-bits", "2",
                    "--out", Path("m2.qc")})
                .code,
            kExitOk);
  std::ifstream in(Path("m2.qc"));
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "qubits: 9");

  const Result r = RunCli({"bench", "--family", "supremacy", "--widths", "13..16",
                           "--backends", "kernel", "--reps", "2", "--seed", "7",
                           "--depth", "2", "--out", Path("r.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream csv(Path("r.csv"));
  const auto records = ParseRecordsCsv(csv);
  EXPECT_EQ(records.size(), 8u);
  for (const auto& rec : records) EXPECT_EQ(rec.seed, 7u);
}

}  // namespace
}  // namespace svsim::cli
