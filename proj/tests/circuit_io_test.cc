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


#include "svsim/circuit_io.h"

#include <cmath>
#include <filesystem>

#include <gtest/gtest.h>

#include "svsim/circuitgen.h"

namespace svsim {
namespace {

TEST(CircuitText, PrintsCanonicalForm) {
  Circuit c(3, CircuitFamily::kCustom);
  c.SetMetadata("zeta", "last");
  c.SetMetadata("alpha", "first");
  c.AddMoment(Moment({Gate::H(0), Gate::CNOT(1, 2)}));
  c.AddMoment(Moment());
  c.AddMoment(Moment({Gate(GateMatrix(1, {0, 1, 1, 0}), {2})}));
  EXPECT_EQ(PrintCircuit(c),
            "qubits: 3\n"
            "family: custom\n"
            "meta.alpha: first\n"
            "meta.zeta: last\n"
            "H 0; CNOT 1,2\n"
            "-\n"
            "Custom 2 [0 0 1 0 1 0 0 0]\n");
}

TEST(CircuitText, RoundTripsGeneratedCircuits) {
  for (const Circuit& c :
       {GenerateSupremacy({3, 3, 6, 11}), GenerateMultiplier({2}),
        RandomCircuit({5, 12, 3, 0.1})}) {
    EXPECT_EQ(ParseCircuit(PrintCircuit(c)), c);
  }
}

TEST(CircuitText, CustomMatrixRoundTripsBitExactly) {
  Rng rng(9);
  Circuit c(3);
  c.AddMoment(Moment({Gate(RandomUnitary(3, rng), {2, 0, 1})}));
  const Circuit back = ParseCircuit(PrintCircuit(c));
  EXPECT_EQ(back, c);
}

TEST(CircuitText, AcceptsCommentsAndBlankLines) {
  const Circuit c = ParseCircuit(
      "# header\n\nqubits: 2\n  # indented comment\nX 0 ; Z 1\r\n\n");
  EXPECT_EQ(c.depth(), 1);
  EXPECT_EQ(c.moments()[0].gates()[1], Gate::Z(1));
}

void ExpectErrorAtLine(std::string_view text, int line) {
  try {
    ParseCircuit(text);
    ADD_FAILURE() << "parsed: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find("line " + std::to_string(line)),
              std::string::npos);
  }
}

TEST(CircuitText, MalformedInputNamesLine) {
  ExpectErrorAtLine("X 0\n", 1);                      // no qubits header
  ExpectErrorAtLine("qubits: 2\nFoo 0\n", 2);          // unknown gate
  ExpectErrorAtLine("qubits: 2\nX 0\nX 2\n", 3);       // out of range
  ExpectErrorAtLine("qubits: 2\nCZ 0\n", 2);           // wrong arity
  ExpectErrorAtLine("qubits: 2\nX 0; X 0\n", 2);       // overlap
  ExpectErrorAtLine("qubits: 2\nX 0\nqubits: 3\n", 3); // header after moment
  ExpectErrorAtLine("qubits: 1\nCustom 0 [1 0 0 0 0 0 2 0]\n", 2);
  ExpectErrorAtLine("qubits: 1\nCustom 0 [1 0 0]\n", 2);
  ExpectErrorAtLine("qubits: x\n", 1);
  ExpectErrorAtLine("qubits: 2\nfamily: qft\n", 2);
  ExpectErrorAtLine("qubits: 2\nX 0,\n", 2);
}

TEST(CircuitText, FileRoundTrip) {
  const auto path =
      std::filesystem::temp_directory_path() / "svsim_circuit_io_test.txt";
  const Circuit c = GenerateSupremacy({2, 3, 4, 5});
  WriteCircuitFile(path, c);
  EXPECT_EQ(ReadCircuitFile(path), c);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadCircuitFile(path), std::runtime_error);
}

TEST(FormatReal, ShortestRoundTrip) {
  EXPECT_EQ(FormatReal(0.5), "0.5");
  EXPECT_EQ(FormatReal(-0.0), "-0");
  const double s = std::sqrt(0.5);
  EXPECT_EQ(std::stod(FormatReal(s)), s);
}

}  // namespace
}  // namespace svsim
