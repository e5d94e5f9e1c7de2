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


#ifndef SVSIM_GATE_H_
#define SVSIM_GATE_H_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "svsim/common.h"

namespace svsim {

enum class GateKind : std::uint8_t {
  kX,
  kY,
  kZ,
  kH,
  kS,
  kT,
  kSqrtX,
  kSqrtY,
  kCZ,
  kCNOT,
  kToffoli,
  kCustom,
};

inline constexpr std::array<GateKind, 12> kAllGateKinds = {
    GateKind::kX,     GateKind::kY,     GateKind::kZ,     GateKind::kH,
    GateKind::kS,     GateKind::kT,     GateKind::kSqrtX, GateKind::kSqrtY,
    GateKind::kCZ,    GateKind::kCNOT,  GateKind::kToffoli,
    GateKind::kCustom};

inline constexpr int kMaxGateArity = 3;

// Text name used by the circuit format ("X", "SqrtX", "Toffoli", ...).
std::string_view GateKindName(GateKind kind);
std::optional<GateKind> ParseGateKind(std::string_view name);

// Number of qubits a fixed kind acts on; 0 for kCustom (set by its matrix).
int FixedArity(GateKind kind);

// Dense 2^k x 2^k row-major unitary on k <= 3 qubits. Local index bit j
// corresponds to the j-th target of the gate carrying the matrix.
class GateMatrix {
 public:
  GateMatrix(int num_qubits, std::vector<Amplitude> row_major);

  static GateMatrix Identity(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  int dim() const { return 1 << num_qubits_; }

  const Amplitude& operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * dim() + col)];
  }
  std::span<const Amplitude> entries() const { return entries_; }

  GateMatrix ConjugateTranspose() const;

  // max |(U^dagger U - I)_{ij}|
  double UnitarityError() const;

  friend bool operator==(const GateMatrix&, const GateMatrix&) = default;

 private:
  int num_qubits_;
  std::vector<Amplitude> entries_;
};

// Matrix of a fixed kind; controlled kinds put controls on the low local bits
// and the target on the highest one.
GateMatrix FixedKindMatrix(GateKind kind);

// A gate kind bound to its target qubits.
//
// Targets are pairwise distinct and non-negative. For CZ, CNOT and Toffoli
// the order is controls first, target last. Custom gates must be unitary to
// within 1e-12 elementwise.
class Gate {
 public:
  Gate(GateKind kind, std::span<const int> targets);
  Gate(GateKind kind, std::initializer_list<int> targets)
      : Gate(kind, std::span<const int>(targets.begin(), targets.size())) {}
  Gate(GateMatrix matrix, std::span<const int> targets);
  Gate(GateMatrix matrix, std::initializer_list<int> targets)
      : Gate(std::move(matrix),
             std::span<const int>(targets.begin(), targets.size())) {}

  static Gate X(int q) { return Gate(GateKind::kX, {q}); }
  static Gate Y(int q) { return Gate(GateKind::kY, {q}); }
  static Gate Z(int q) { return Gate(GateKind::kZ, {q}); }
  static Gate H(int q) { return Gate(GateKind::kH, {q}); }
  static Gate S(int q) { return Gate(GateKind::kS, {q}); }
  static Gate T(int q) { return Gate(GateKind::kT, {q}); }
  static Gate SqrtX(int q) { return Gate(GateKind::kSqrtX, {q}); }
  static Gate SqrtY(int q) { return Gate(GateKind::kSqrtY, {q}); }
  static Gate CZ(int a, int b) { return Gate(GateKind::kCZ, {a, b}); }
  static Gate CNOT(int control, int target) {
    return Gate(GateKind::kCNOT, {control, target});
  }
  static Gate Toffoli(int c0, int c1, int target) {
    return Gate(GateKind::kToffoli, {c0, c1, target});
  }

  GateKind kind() const { return kind_; }
  int arity() const { return arity_; }
  std::span<const int> targets() const {
    return std::span<const int>(targets_.data(), arity_);
  }
  bool Touches(int qubit) const;
  int MaxTarget() const;

  // Unitary in the local basis described on GateMatrix.
  GateMatrix Matrix() const;

  // Custom gate implementing U^dagger on the same targets.
  Gate Inverse() const;

  // Same gate with every target q replaced by mapping[q].
  Gate Remapped(std::span<const int> mapping) const;

  const std::optional<GateMatrix>& custom_matrix() const { return custom_; }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::span<const int> targets,
       std::optional<GateMatrix> custom);

  GateKind kind_;
  int arity_ = 0;
  std::array<int, kMaxGateArity> targets_{};
  std::optional<GateMatrix> custom_;
};

}  // namespace svsim

#endif  // SVSIM_GATE_H_
