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


#include <stdexcept>
#include <string>

#include "svsim/backend.h"

namespace svsim {
namespace {

void CheckDenseWidth(int num_qubits) {
  if (num_qubits > kDenseMaxQubits) {
    const ByteCount bytes = DenseMatrixBytes(num_qubits);
    throw ResourceError("dense backend is limited to " +
                            std::to_string(kDenseMaxQubits) +
                            " qubits; a " + std::to_string(num_qubits) +
                            "-qubit moment matrix needs " + FormatBytes(bytes),
                        bytes);
  }
}

void CheckMomentTargets(const Moment& moment, int num_qubits) {
  for (const Gate& g : moment.gates()) {
    if (g.MaxTarget() >= num_qubits) {
      throw std::out_of_range("gate target " + std::to_string(g.MaxTarget()) +
                              " out of range for " +
                              std::to_string(num_qubits) + " qubits");
    }
  }
}

// Local index of `basis` relative to a gate's targets.
int LocalIndex(std::size_t basis, std::span<const int> targets) {
  int local = 0;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    local |= static_cast<int>((basis >> targets[j]) & 1u) << j;
  }
  return local;
}

}  // namespace

ByteCount DenseMatrixBytes(int num_qubits) {
  return (ByteCount{1} << (2 * num_qubits)) * sizeof(Amplitude);
}

MomentMatrix::MomentMatrix(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("moment matrix needs n >= 1");
  CheckDenseWidth(num_qubits);
  try {
    entries_.assign(dim() * dim(), Amplitude(0.0, 0.0));
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate a " + std::to_string(num_qubits) +
                            "-qubit moment matrix (" +
                            FormatBytes(DenseMatrixBytes(num_qubits)) + ")",
                        DenseMatrixBytes(num_qubits));
  }
}

void MomentMatrix::Fill(const Moment& moment) {
  const std::size_t n = dim();
  std::size_t touched = 0;
  std::vector<GateMatrix> mats;
  mats.reserve(moment.size());
  for (const Gate& g : moment.gates()) {
    for (int q : g.targets()) touched |= std::size_t{1} << q;
    mats.push_back(g.Matrix());
  }
  for (std::size_t row = 0; row < n; ++row) {
    const std::size_t fixed = row & ~touched;
    // Enumerate every column that agrees with `row` on untouched qubits.
    std::size_t sub = 0;
    do {
      const std::size_t col = fixed | sub;
      Amplitude value(1.0, 0.0);
      for (std::size_t k = 0; k < mats.size(); ++k) {
        const auto targets = moment.gates()[k].targets();
        value = Mul(value, mats[k](LocalIndex(row, targets),
                                   LocalIndex(col, targets)));
      }
      (*this)(row, col) = value;
      sub = (sub - touched) & touched;
    } while (sub != 0);
  }
}

void MomentMatrix::Apply(StateVector& state) const {
  if (state.num_qubits() != num_qubits_) {
    throw std::invalid_argument("moment matrix width does not match state");
  }
  const std::size_t n = dim();
  std::vector<Amplitude> out(n);
  const auto in = state.amplitudes();
  for (std::size_t row = 0; row < n; ++row) {
    const Amplitude* m = &entries_[row * n];
    Amplitude sum(0.0, 0.0);
    for (std::size_t col = 0; col < n; ++col) sum += Mul(m[col], in[col]);
    out[row] = sum;
  }
  std::copy(out.begin(), out.end(), state.amplitudes().begin());
}

double MomentMatrix::UnitarityError() const {
  const std::size_t n = dim();
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Amplitude sum(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        sum += std::conj((*this)(k, r)) * (*this)(k, c);
      }
      worst = std::max(worst, std::abs(sum - Amplitude(r == c ? 1.0 : 0.0)));
    }
  }
  return worst;
}

MomentMatrix BuildMomentMatrix(const Moment& moment, int num_qubits) {
  CheckDenseWidth(num_qubits);
  CheckMomentTargets(moment, num_qubits);
  MomentMatrix matrix(num_qubits);
  matrix.Fill(moment);
  return matrix;
}

void ApplyGateDense(StateVector& state, const Gate& gate) {
  BuildMomentMatrix(Moment({gate}), state.num_qubits()).Apply(state);
}

void DenseBackend::Apply(StateVector& state, const Gate& gate) const {
  ApplyGateDense(state, gate);
}

void DenseBackend::ApplyMoment(StateVector& state, const Moment& moment) const {
  BuildMomentMatrix(moment, state.num_qubits()).Apply(state);
}

}  // namespace svsim
