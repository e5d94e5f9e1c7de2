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
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>

#include "svsim/backend.h"

namespace svsim {
namespace {

// Below this many groups a gate finishes faster than a thread team wakes up.
constexpr std::uint64_t kMinParallelGroups = std::uint64_t{1} << 12;

template <typename Body>
void ForEachGroup(std::uint64_t groups, int workers, const Body& body) {
  if (workers <= 1 || groups < kMinParallelGroups) {
    for (std::uint64_t g = 0; g < groups; ++g) body(g);
    return;
  }
  const auto count = static_cast<std::int64_t>(groups);
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t g = 0; g < count; ++g) body(static_cast<std::uint64_t>(g));
}

inline std::uint64_t InsertZeroBit(std::uint64_t x, int pos) {
  const std::uint64_t low = x & ((std::uint64_t{1} << pos) - 1);
  return ((x ^ low) << 1) | low;
}

// Expands group number g into the basis index with zeros at every target bit.
template <int K>
struct GroupIndexer {
  std::array<int, K> sorted;

  explicit GroupIndexer(std::span<const int> targets) {
    std::copy(targets.begin(), targets.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.end());
  }

  std::uint64_t Base(std::uint64_t g) const {
    for (int pos : sorted) g = InsertZeroBit(g, pos);
    return g;
  }
};

inline std::uint64_t Bit(int q) { return std::uint64_t{1} << q; }

void ApplyOneQubit(std::span<Amplitude> amps, const Gate& gate, int workers) {
  const int q = gate.targets()[0];
  const std::uint64_t bit = Bit(q);
  const std::uint64_t groups = amps.size() / 2;
  Amplitude* a = amps.data();

  switch (gate.kind()) {
    case GateKind::kX:
      ForEachGroup(groups, workers, [=](std::uint64_t g) {
        const std::uint64_t i0 = InsertZeroBit(g, q);
        std::swap(a[i0], a[i0 | bit]);
      });
      return;
    case GateKind::kY:
      ForEachGroup(groups, workers, [=](std::uint64_t g) {
        const std::uint64_t i0 = InsertZeroBit(g, q);
        const Amplitude a0 = a[i0];
        const Amplitude a1 = a[i0 | bit];
        a[i0] = Amplitude(a1.imag(), -a1.real());
        a[i0 | bit] = Amplitude(-a0.imag(), a0.real());
      });
      return;
    case GateKind::kZ:
      ForEachGroup(groups, workers, [=](std::uint64_t g) {
        Amplitude& v = a[InsertZeroBit(g, q) | bit];
        v = -v;
      });
      return;
    case GateKind::kS:
      ForEachGroup(groups, workers, [=](std::uint64_t g) {
        Amplitude& v = a[InsertZeroBit(g, q) | bit];
        v = Amplitude(-v.imag(), v.real());
      });
      return;
    case GateKind::kT: {
      const Amplitude phase = FixedKindMatrix(GateKind::kT)(1, 1);
      ForEachGroup(groups, workers, [=](std::uint64_t g) {
        Amplitude& v = a[InsertZeroBit(g, q) | bit];
        v = Mul(phase, v);
      });
      return;
    }
    default:
      break;
  }

  const GateMatrix m = gate.Matrix();
  const Amplitude m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  ForEachGroup(groups, workers, [=](std::uint64_t g) {
    const std::uint64_t i0 = InsertZeroBit(g, q);
    const std::uint64_t i1 = i0 | bit;
    const Amplitude a0 = a[i0];
    const Amplitude a1 = a[i1];
    a[i0] = Mul(m00, a0) + Mul(m01, a1);
    a[i1] = Mul(m10, a0) + Mul(m11, a1);
  });
}

// Dense 2^K x 2^K update of each group, used for custom multi-qubit gates.
template <int K>
void ApplyGeneral(std::span<Amplitude> amps, const Gate& gate, int workers) {
  constexpr int kDim = 1 << K;
  const GroupIndexer<K> indexer(gate.targets());
  std::array<std::uint64_t, kDim> offsets{};
  for (int l = 0; l < kDim; ++l) {
    for (int j = 0; j < K; ++j) {
      if (l & (1 << j)) offsets[l] |= Bit(gate.targets()[j]);
    }
  }
  const GateMatrix m = gate.Matrix();
  std::array<Amplitude, kDim * kDim> u;
  std::copy(m.entries().begin(), m.entries().end(), u.begin());
  Amplitude* a = amps.data();
  ForEachGroup(amps.size() >> K, workers, [&, a](std::uint64_t g) {
    const std::uint64_t base = indexer.Base(g);
    std::array<Amplitude, kDim> in;
    for (int l = 0; l < kDim; ++l) in[l] = a[base | offsets[l]];
    for (int r = 0; r < kDim; ++r) {
      Amplitude sum = Mul(u[r * kDim], in[0]);
      for (int c = 1; c < kDim; ++c) sum += Mul(u[r * kDim + c], in[c]);
      a[base | offsets[r]] = sum;
    }
  });
}

void ApplyTwoQubit(std::span<Amplitude> amps, const Gate& gate, int workers) {
  const GroupIndexer<2> indexer(gate.targets());
  const std::uint64_t b0 = Bit(gate.targets()[0]);
  const std::uint64_t b1 = Bit(gate.targets()[1]);
  Amplitude* a = amps.data();
  switch (gate.kind()) {
    case GateKind::kCZ:
      ForEachGroup(amps.size() >> 2, workers, [&, a](std::uint64_t g) {
        Amplitude& v = a[indexer.Base(g) | b0 | b1];
        v = -v;
      });
      return;
    case GateKind::kCNOT:
      ForEachGroup(amps.size() >> 2, workers, [&, a](std::uint64_t g) {
        const std::uint64_t i = indexer.Base(g) | b0;
        std::swap(a[i], a[i | b1]);
      });
      return;
    default:
      ApplyGeneral<2>(amps, gate, workers);
  }
}

void ApplyThreeQubit(std::span<Amplitude> amps, const Gate& gate, int workers) {
  if (gate.kind() != GateKind::kToffoli) {
    ApplyGeneral<3>(amps, gate, workers);
    return;
  }
  const GroupIndexer<3> indexer(gate.targets());
  const std::uint64_t controls = Bit(gate.targets()[0]) | Bit(gate.targets()[1]);
  const std::uint64_t target = Bit(gate.targets()[2]);
  Amplitude* a = amps.data();
  ForEachGroup(amps.size() >> 3, workers, [&, a](std::uint64_t g) {
    const std::uint64_t i = indexer.Base(g) | controls;
    std::swap(a[i], a[i | target]);
  });
}

}  // namespace

void Backend::ApplyMoment(StateVector& state, const Moment& moment) const {
  for (const Gate& gate : moment.gates()) Apply(state, gate);
}

void ApplyGateKernel(StateVector& state, const Gate& gate, int workers) {
  if (gate.MaxTarget() >= state.num_qubits()) {
    throw std::out_of_range("gate target " + std::to_string(gate.MaxTarget()) +
                            " out of range for " +
                            std::to_string(state.num_qubits()) + " qubits");
  }
  switch (gate.arity()) {
    case 1:
      ApplyOneQubit(state.amplitudes(), gate, workers);
      return;
    case 2:
      ApplyTwoQubit(state.amplitudes(), gate, workers);
      return;
    case 3:
      ApplyThreeQubit(state.amplitudes(), gate, workers);
      return;
  }
  throw std::invalid_argument("unsupported gate arity");
}

KernelBackend::KernelBackend(int workers) : workers_(workers) {
  if (workers < 1) {
    throw std::invalid_argument("worker count must be positive, got " +
                                std::to_string(workers));
  }
}

void KernelBackend::Apply(StateVector& state, const Gate& gate) const {
  ApplyGateKernel(state, gate, workers_);
}

int KernelBackend::DefaultWorkers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace svsim
