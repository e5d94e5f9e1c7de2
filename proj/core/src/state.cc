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


#include "svsim/state.h"

#include <cmath>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

namespace svsim {
namespace {

constexpr std::size_t kPairwiseLeaf = 16;

double SumSquares(const Amplitude* amps, std::size_t count) {
  if (count <= kPairwiseLeaf) {
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      sum += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
    return sum;
  }
  const std::size_t half = count / 2;
  return SumSquares(amps, half) + SumSquares(amps + half, count - half);
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits < 1 || num_qubits > 62) {
    throw std::invalid_argument("state vector width must be in [1, 62], got " +
                                std::to_string(num_qubits));
  }
  if (amps_.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument(
        "state vector of " + std::to_string(num_qubits) + " qubits needs " +
        std::to_string(std::size_t{1} << num_qubits) + " amplitudes, got " +
        std::to_string(amps_.size()));
  }
}

ByteCount MemoryEstimate(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxEstimableQubits) {
    throw std::invalid_argument("qubit count out of range: " +
                                std::to_string(num_qubits));
  }
  return (ByteCount{1} << num_qubits) * sizeof(Amplitude);
}

std::vector<Amplitude> AllocateAmplitudes(int num_qubits, ByteCount limit) {
  const ByteCount required = MemoryEstimate(num_qubits);
  auto fail = [&](const std::string& reason) {
    return ResourceError("cannot allocate a " + std::to_string(num_qubits) +
                             "-qubit state: needs " + FormatBytes(required) +
                             ", " + reason,
                         required);
  };
  if (num_qubits > 62) throw fail("exceeds the addressable index range");
  if (required > limit) {
    throw fail("limit is " + FormatBytes(limit));
  }
  try {
    return std::vector<Amplitude>(std::size_t{1} << num_qubits);
  } catch (const std::bad_alloc&) {
    throw fail("allocation failed");
  } catch (const std::length_error&) {
    throw fail("allocation failed");
  }
}

StateVector ZeroState(int num_qubits) {
  std::vector<Amplitude> amps = AllocateAmplitudes(num_qubits);
  amps[0] = Amplitude(1.0, 0.0);
  return StateVector(num_qubits, std::move(amps));
}

StateVector EqualSuperpositionState(int num_qubits) {
  std::vector<Amplitude> amps = AllocateAmplitudes(num_qubits);
  // 2^(-n/2), exact for even n and correctly rounded sqrt(1/2) scaling for odd.
  double value = std::ldexp(1.0, -(num_qubits / 2));
  if (num_qubits % 2 != 0) value *= std::sqrt(0.5);
  for (Amplitude& a : amps) a = Amplitude(value, 0.0);
  return StateVector(num_qubits, std::move(amps));
}

double Norm(const StateVector& state) {
  const auto amps = state.amplitudes();
  return std::sqrt(SumSquares(amps.data(), amps.size()));
}

Amplitude BasisAmplitude(const StateVector& state, BasisIndex index) {
  if (index >= state.size()) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " out of range for " +
                            std::to_string(state.num_qubits()) + " qubits");
  }
  return state[index];
}

MaxDifference MaxAbsDifference(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("cannot compare states of different widths");
  }
  MaxDifference out;
  for (BasisIndex i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (d > out.value || std::isnan(d)) {
      out.value = d;
      out.index = i;
      if (std::isnan(d)) break;
    }
  }
  return out;
}

bool BitIdentical(const StateVector& a, const StateVector& b) {
  return a.num_qubits() == b.num_qubits() &&
         std::memcmp(a.amplitudes().data(), b.amplitudes().data(),
                     a.size() * sizeof(Amplitude)) == 0;
}

}  // namespace svsim
