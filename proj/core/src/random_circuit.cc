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


#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "svsim/circuitgen.h"

namespace svsim {
namespace {

void Orthonormalise(std::vector<Amplitude>& m, int dim) {
  // Column-wise modified Gram-Schmidt on a row-major matrix.
  auto at = [&](int r, int c) -> Amplitude& { return m[r * dim + c]; };
  for (int c = 0; c < dim; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      Amplitude dot = 0.0;
      for (int r = 0; r < dim; ++r) dot += std::conj(at(r, prev)) * at(r, c);
      for (int r = 0; r < dim; ++r) at(r, c) -= dot * at(r, prev);
    }
    double norm = 0.0;
    for (int r = 0; r < dim; ++r) norm += std::norm(at(r, c));
    norm = std::sqrt(norm);
    for (int r = 0; r < dim; ++r) at(r, c) /= norm;
  }
}

}  // namespace

GateMatrix RandomUnitary(int num_qubits, Rng& rng) {
  if (num_qubits < 1 || num_qubits > kMaxGateArity) {
    throw std::invalid_argument("random unitary needs 1 to 3 qubits");
  }
  const int dim = 1 << num_qubits;
  std::vector<Amplitude> m(static_cast<std::size_t>(dim * dim));
  for (Amplitude& a : m) a = Amplitude(rng.Normal(), rng.Normal());
  Orthonormalise(m, dim);
  Orthonormalise(m, dim);
  return GateMatrix(num_qubits, std::move(m));
}

Circuit RandomCircuit(const RandomCircuitSpec& spec) {
  if (spec.num_qubits < 1 || spec.depth < 0) {
    throw std::invalid_argument("random circuit needs n >= 1 and depth >= 0");
  }
  Rng rng(spec.seed);
  Circuit circuit(spec.num_qubits, CircuitFamily::kCustom);
  circuit.SetMetadata("seed", std::to_string(spec.seed));
  std::vector<int> order(static_cast<std::size_t>(spec.num_qubits));
  for (int m = 0; m < spec.depth; ++m) {
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.UniformBelow(i)]);
    }
    Moment moment;
    std::size_t next = 0;
    while (next < order.size()) {
      const int remaining = static_cast<int>(order.size() - next);
      if (rng.UniformDouble() < spec.idle_probability) {
        ++next;
        continue;
      }
      GateKind kind = kAllGateKinds[rng.UniformBelow(kAllGateKinds.size())];
      while (FixedArity(kind) > remaining) {
        kind = kAllGateKinds[rng.UniformBelow(kAllGateKinds.size())];
      }
      std::vector<int> targets;
      if (kind == GateKind::kCustom) {
        const int k = 1 + static_cast<int>(rng.UniformBelow(
                              static_cast<std::uint64_t>(std::min(3, remaining))));
        targets.assign(order.begin() + next, order.begin() + next + k);
        moment.Add(Gate(RandomUnitary(k, rng), std::span<const int>(targets)));
      } else {
        const int k = FixedArity(kind);
        targets.assign(order.begin() + next, order.begin() + next + k);
        moment.Add(Gate(kind, std::span<const int>(targets)));
      }
      next += targets.size();
    }
    circuit.AddMoment(std::move(moment));
  }
  return circuit;
}

}  // namespace svsim
