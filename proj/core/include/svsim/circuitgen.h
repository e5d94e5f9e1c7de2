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


#ifndef SVSIM_CIRCUITGEN_H_
#define SVSIM_CIRCUITGEN_H_

#include <cstdint>
#include <vector>

#include "svsim/circuit.h"
#include "svsim/rng.h"

namespace svsim {

// --- Supremacy-style grid circuits -----------------------------------------

struct GridSpec {
  int rows = 1;
  int cols = 2;
  int depth = 1;  // number of CZ + single-qubit cycles
  std::uint64_t seed = 0;
};

// Qubit index of grid site (row, col).
inline int GridQubit(const GridSpec& spec, int row, int col) {
  return row * spec.cols + col;
}

// CZ pairs of cycle `cycle` (0-based), one of eight rotating nearest-neighbour
// patterns. Pairs within a pattern are disjoint.
std::vector<std::pair<int, int>> GridCzPattern(const GridSpec& spec, int cycle);

// Moment 0 is H on every qubit. Each of `depth` cycles is one CZ layer then
// one single-qubit layer; a qubit untouched by that CZ layer gets T if it has
// had no single-qubit gate since the initial H, else a uniform pick from
// {SqrtX, SqrtY, T} different from its previous one. Depth is 1 + 2 * cycles
// (empty layers are kept). Metadata: rows, cols, cycles, seed.
Circuit GenerateSupremacy(const GridSpec& spec);

// Smallest near-square grid (cols <= rows <= cols + 3) holding at least
// `width` qubits; ties go to the squarer shape.
GridSpec SmallestGridFor(int width, int depth, std::uint64_t seed);

// --- Reversible multipliers --------------------------------------------------

struct MultiplierSpec {
  int operand_bits = 3;
};

// Register layout of the 4n + 1 qubit multiplier.
struct MultiplierLayout {
  int operand_bits;

  int a(int i) const { return i; }
  int b(int i) const { return operand_bits + i; }
  int p(int i) const { return 2 * operand_bits + i; }
  int ancilla() const { return 4 * operand_bits; }
  int width() const { return 4 * operand_bits + 1; }

  // Basis index of |a>|b>|p>|ancilla>.
  std::uint64_t Encode(std::uint64_t a_value, std::uint64_t b_value,
                       std::uint64_t p_value, int ancilla_value) const;

  struct Registers {
    std::uint64_t a, b, p;
    int ancilla;
  };
  Registers Decode(std::uint64_t index) const;
};

// moments <= kMultiplierDepthConstant * n^2 for every n >= 1.
inline constexpr int kMultiplierDepthConstant = 13;

// Shift-and-add multiplier |a>|b>|0>|0> -> |a>|b>|a*b>|0>. Row i adds A into
// P[i..i+n] with a Cuccaro ripple-carry adder in which every gate is
// additionally controlled by B[i]; three-control X gates are split into four
// Toffolis around a borrowed qubit. Metadata: operand_bits, depth_constant.
Circuit GenerateMultiplier(const MultiplierSpec& spec);

// Copy of `circuit` with a leading moment of X gates setting A = a, B = b.
Circuit PrepareMultiplierInput(const Circuit& multiplier, std::uint64_t a,
                               std::uint64_t b);

// --- Width reduction ---------------------------------------------------------

// Deletes `qubit` and every gate touching it, relabels the remaining qubits
// to [0, n - 1) in order and drops moments left empty. Records the removed
// index (in the input's numbering) as meta `removed_qubit` and appends it to
// `removed_history`. Throws std::invalid_argument for width-1 input.
Circuit RemoveQubit(const Circuit& circuit, int qubit);

// RemoveQubit on a qubit drawn uniformly from the circuit's qubits.
Circuit RemoveRandomQubit(const Circuit& circuit, Rng& rng);

struct SweepPlan {
  Circuit base;
  std::vector<int> target_widths;  // base width - 1 down to min_width
  std::uint64_t seed = 0;
  std::vector<Circuit> circuits;   // circuits[i] has width target_widths[i]
  std::vector<int> removed;        // qubit removed to get circuits[i]
};

// Repeated RemoveRandomQubit from `base` down to `min_width`, one circuit per
// width. Throws std::invalid_argument when min_width is not in
// [1, base width).
SweepPlan WidthSweep(const Circuit& base, int min_width, std::uint64_t seed);

// --- Random test circuits ----------------------------------------------------

struct RandomCircuitSpec {
  int num_qubits = 4;
  int depth = 8;
  std::uint64_t seed = 0;
  // Probability that a slot is left idle in a moment.
  double idle_probability = 0.1;
};

// Haar-like random k-qubit unitary (Gaussian matrix, twice re-orthogonalised).
GateMatrix RandomUnitary(int num_qubits, Rng& rng);

// `depth` moments of gates drawn uniformly from every GateKind (Custom gates
// get 1 to 3 targets and a random unitary).
Circuit RandomCircuit(const RandomCircuitSpec& spec);

}  // namespace svsim

#endif  // SVSIM_CIRCUITGEN_H_
