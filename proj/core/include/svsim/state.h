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


#ifndef SVSIM_STATE_H_
#define SVSIM_STATE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "svsim/common.h"

namespace svsim {

// Largest qubit count MemoryEstimate accepts (2^123 * 16 still fits in 128
// bits). Allocation fails far earlier.
inline constexpr int kMaxEstimableQubits = 123;

// Full-amplitude state of an n-qubit register.
//
// Owns 2^n contiguous amplitudes. Basis index bit k is qubit k. The
// constructor only checks the length, so unnormalised vectors can be built
// for testing; the named factories below always return normalised states.
class StateVector {
 public:
  StateVector(int num_qubits, std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }

  std::span<Amplitude> amplitudes() { return amps_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }

  Amplitude& operator[](BasisIndex index) { return amps_[index]; }
  const Amplitude& operator[](BasisIndex index) const { return amps_[index]; }

  // Exact equality of every amplitude (uses ==, so +0 and -0 compare equal).
  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  int num_qubits_;
  std::vector<Amplitude> amps_;
};

// Bytes needed for the amplitudes of an n-qubit state: exactly 2^n * 16.
// Throws std::invalid_argument outside [1, kMaxEstimableQubits].
ByteCount MemoryEstimate(int num_qubits);

// Allocates 2^n zeroed amplitudes. Throws ResourceError (with the required
// byte count) when the request exceeds `limit` or the allocator refuses it.
std::vector<Amplitude> AllocateAmplitudes(
    int num_qubits, ByteCount limit = PhysicalMemoryBytes());

// |0...0>.
StateVector ZeroState(int num_qubits);

// Every amplitude equal to 2^(-n/2).
StateVector EqualSuperpositionState(int num_qubits);

// sqrt(sum |a_i|^2) with a fixed pairwise summation tree, so the result does
// not depend on how the state was produced or on thread count.
double Norm(const StateVector& state);

// Amplitude of |index>. Throws std::out_of_range for index >= 2^n.
Amplitude BasisAmplitude(const StateVector& state, BasisIndex index);

// Largest elementwise |a_i - b_i|; the states must have equal width.
struct MaxDifference {
  double value = 0.0;
  BasisIndex index = 0;
};
MaxDifference MaxAbsDifference(const StateVector& a, const StateVector& b);

// True when both states have identical bit patterns in every amplitude.
bool BitIdentical(const StateVector& a, const StateVector& b);

}  // namespace svsim

#endif  // SVSIM_STATE_H_
