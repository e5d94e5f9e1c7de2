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


#ifndef SVSIM_CIRCUIT_IO_H_
#define SVSIM_CIRCUIT_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "svsim/circuit.h"

// Line-oriented circuit text format.
//
//   file    := line*
//   line    := blank | comment | header | moment
//   comment := '#' <anything>
//   header  := 'qubits:' INT
//            | 'family:' ('supremacy' | 'multiplier' | 'custom')
//            | 'meta.' KEY ':' VALUE
//   moment  := '-'                       (an empty moment)
//            | gate (';' gate)*
//   gate    := KIND ' ' INT (',' INT)* [' [' REAL (' ' REAL)* ']']
//
// KIND is one of X Y Z H S T SqrtX SqrtY CZ CNOT Toffoli Custom. Only Custom
// carries the bracketed matrix: 2 * 4^k reals (re im pairs, row-major) for a
// k-target gate. Headers must come before the first moment and `qubits` is
// required. Reals are printed in shortest round-trip form, so
// ParseCircuit(PrintCircuit(c)) == c exactly.
//
// Canonical output order: qubits, family, meta.* sorted by key, moments.

namespace svsim {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);

  // 1-based line of the offending input; 0 when not line-specific.
  int line() const { return line_; }

 private:
  int line_;
};

std::string PrintCircuit(const Circuit& circuit);
Circuit ParseCircuit(std::string_view text);

Circuit ReadCircuitFile(const std::filesystem::path& path);
void WriteCircuitFile(const std::filesystem::path& path,
                      const Circuit& circuit);

// Shortest decimal string that parses back to exactly `value`.
std::string FormatReal(double value);

}  // namespace svsim

#endif  // SVSIM_CIRCUIT_IO_H_
