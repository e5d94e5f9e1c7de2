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


#include "svsim/gate.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace svsim {
namespace {

constexpr double kCustomUnitarityTolerance = 1e-12;

struct KindInfo {
  GateKind kind;
  std::string_view name;
  int arity;
};

constexpr std::array<KindInfo, 12> kKindTable = {{
    {GateKind::kX, "X", 1},
    {GateKind::kY, "Y", 1},
    {GateKind::kZ, "Z", 1},
    {GateKind::kH, "H", 1},
    {GateKind::kS, "S", 1},
    {GateKind::kT, "T", 1},
    {GateKind::kSqrtX, "SqrtX", 1},
    {GateKind::kSqrtY, "SqrtY", 1},
    {GateKind::kCZ, "CZ", 2},
    {GateKind::kCNOT, "CNOT", 2},
    {GateKind::kToffoli, "Toffoli", 3},
    {GateKind::kCustom, "Custom", 0},
}};

const KindInfo& Info(GateKind kind) {
  return kKindTable[static_cast<std::size_t>(kind)];
}

GateMatrix Permutation(int num_qubits, std::initializer_list<int> image) {
  const int dim = 1 << num_qubits;
  std::vector<Amplitude> m(static_cast<std::size_t>(dim * dim));
  int col = 0;
  for (int row : image) {
    m[static_cast<std::size_t>(row * dim + col)] = 1.0;
    ++col;
  }
  return GateMatrix(num_qubits, std::move(m));
}

}  // namespace

std::string_view GateKindName(GateKind kind) { return Info(kind).name; }

std::optional<GateKind> ParseGateKind(std::string_view name) {
  for (const KindInfo& info : kKindTable) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

int FixedArity(GateKind kind) { return Info(kind).arity; }

GateMatrix::GateMatrix(int num_qubits, std::vector<Amplitude> row_major)
    : num_qubits_(num_qubits), entries_(std::move(row_major)) {
  if (num_qubits < 1 || num_qubits > kMaxGateArity) {
    throw std::invalid_argument("gate matrices act on 1 to 3 qubits, got " +
                                std::to_string(num_qubits));
  }
  const std::size_t expected = std::size_t{1} << (2 * num_qubits);
  if (entries_.size() != expected) {
    throw std::invalid_argument("gate matrix on " + std::to_string(num_qubits) +
                                " qubits needs " + std::to_string(expected) +
                                " entries, got " +
                                std::to_string(entries_.size()));
  }
  for (const Amplitude& a : entries_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("gate matrix has a non-finite entry");
    }
  }
}

GateMatrix GateMatrix::Identity(int num_qubits) {
  const int dim = 1 << num_qubits;
  std::vector<Amplitude> m(static_cast<std::size_t>(dim * dim));
  for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i * dim + i)] = 1.0;
  return GateMatrix(num_qubits, std::move(m));
}

GateMatrix GateMatrix::ConjugateTranspose() const {
  const int d = dim();
  std::vector<Amplitude> m(entries_.size());
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      m[static_cast<std::size_t>(c * d + r)] = std::conj((*this)(r, c));
    }
  }
  return GateMatrix(num_qubits_, std::move(m));
}

double GateMatrix::UnitarityError() const {
  const int d = dim();
  double worst = 0.0;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      Amplitude sum = 0.0;
      for (int k = 0; k < d; ++k) sum += std::conj((*this)(k, r)) * (*this)(k, c);
      worst = std::max(worst, std::abs(sum - Amplitude(r == c ? 1.0 : 0.0)));
    }
  }
  return worst;
}

GateMatrix FixedKindMatrix(GateKind kind) {
  const double s = std::sqrt(0.5);
  const Amplitude i(0.0, 1.0);
  const Amplitude p(0.5, 0.5);   // (1 + i) / 2
  const Amplitude m(0.5, -0.5);  // (1 - i) / 2
  switch (kind) {
    case GateKind::kX:
      return GateMatrix(1, {0.0, 1.0, 1.0, 0.0});
    case GateKind::kY:
      return GateMatrix(1, {0.0, -i, i, 0.0});
    case GateKind::kZ:
      return GateMatrix(1, {1.0, 0.0, 0.0, -1.0});
    case GateKind::kH:
      return GateMatrix(1, {s, s, s, -s});
    case GateKind::kS:
      return GateMatrix(1, {1.0, 0.0, 0.0, i});
    case GateKind::kT:
      return GateMatrix(1, {1.0, 0.0, 0.0, Amplitude(s, s)});
    case GateKind::kSqrtX:
      return GateMatrix(1, {p, m, m, p});
    case GateKind::kSqrtY:
      return GateMatrix(1, {p, -p, p, p});
    case GateKind::kCZ: {
      GateMatrix cz = GateMatrix::Identity(2);
      std::vector<Amplitude> e(cz.entries().begin(), cz.entries().end());
      e[15] = -1.0;
      return GateMatrix(2, std::move(e));
    }
    case GateKind::kCNOT:
      // local index = control + 2 * target
      return Permutation(2, {0, 3, 2, 1});
    case GateKind::kToffoli:
      return Permutation(3, {0, 1, 2, 7, 4, 5, 6, 3});
    case GateKind::kCustom:
      break;
  }
  throw std::invalid_argument("custom gates carry their own matrix");
}

Gate::Gate(GateKind kind, std::span<const int> targets)
    : Gate(kind, targets, std::nullopt) {}

Gate::Gate(GateMatrix matrix, std::span<const int> targets)
    : Gate(GateKind::kCustom, targets, std::move(matrix)) {}

Gate::Gate(GateKind kind, std::span<const int> targets,
           std::optional<GateMatrix> custom)
    : kind_(kind), custom_(std::move(custom)) {
  int arity = FixedArity(kind);
  if (kind == GateKind::kCustom) {
    if (!custom_) throw std::invalid_argument("custom gate needs a matrix");
    arity = custom_->num_qubits();
    const double err = custom_->UnitarityError();
    if (!(err <= kCustomUnitarityTolerance)) {
      throw std::invalid_argument("custom gate matrix is not unitary (error " +
                                  std::to_string(err) + ")");
    }
  }
  if (static_cast<int>(targets.size()) != arity) {
    throw std::invalid_argument(std::string(GateKindName(kind)) + " takes " +
                                std::to_string(arity) + " target(s), got " +
                                std::to_string(targets.size()));
  }
  arity_ = arity;
  for (int j = 0; j < arity; ++j) {
    if (targets[j] < 0) {
      throw std::out_of_range("negative qubit index " +
                              std::to_string(targets[j]));
    }
    for (int k = 0; k < j; ++k) {
      if (targets[k] == targets[j]) {
        throw std::invalid_argument("repeated target qubit " +
                                    std::to_string(targets[j]));
      }
    }
    targets_[j] = targets[j];
  }
}

bool Gate::Touches(int qubit) const {
  const auto t = targets();
  return std::find(t.begin(), t.end(), qubit) != t.end();
}

int Gate::MaxTarget() const {
  const auto t = targets();
  return *std::max_element(t.begin(), t.end());
}

GateMatrix Gate::Matrix() const {
  return custom_ ? *custom_ : FixedKindMatrix(kind_);
}

Gate Gate::Inverse() const { return Gate(Matrix().ConjugateTranspose(), targets()); }

Gate Gate::Remapped(std::span<const int> mapping) const {
  std::array<int, kMaxGateArity> mapped{};
  for (int j = 0; j < arity_; ++j) {
    mapped[j] = mapping[static_cast<std::size_t>(targets_[j])];
  }
  return Gate(kind_, std::span<const int>(mapped.data(), arity_), custom_);
}

}  // namespace svsim
