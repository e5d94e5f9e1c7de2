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


#ifndef SVSIM_VERIFY_H_
#define SVSIM_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>

#include "svsim/backend.h"
#include "svsim/circuit.h"
#include "svsim/state.h"

namespace svsim {

inline constexpr double kBackendTolerance = 1e-10;
inline constexpr double kPathSumTolerance = 1e-9;

struct EquivalenceReport {
  double max_abs_diff = 0.0;
  BasisIndex worst_index = 0;
  double tolerance = kBackendTolerance;
  bool pass = true;  // max_abs_diff <= tolerance
};

// Simulates `circuit` from `initial` on both backends and compares the final
// states elementwise.
EquivalenceReport CompareBackends(const Backend& subject,
                                  const Backend& reference,
                                  const Circuit& circuit,
                                  const StateVector& initial,
                                  double tolerance = kBackendTolerance);

// Kernel against dense. Throws ResourceError for n > kDenseMaxQubits.
EquivalenceReport CompareBackends(const Circuit& circuit,
                                  const StateVector& initial,
                                  double tolerance = kBackendTolerance,
                                  int workers = 1);

struct PathSumOptions {
  // Refuse circuits with more gates than this unless `override_guard`.
  std::int64_t max_gates = 25;
  bool override_guard = false;
};

// <out| U |in> as a sum over basis-state paths between consecutive gates,
// skipping branches whose matrix element is exactly zero.
Amplitude PathSumAmplitude(const Circuit& circuit, BasisIndex in_index,
                           BasisIndex out_index,
                           const PathSumOptions& options = {});

// log2 of the largest number of paths PathSumAmplitude can visit: the sum
// over gates of log2(max nonzero entries in a matrix column), rounded up.
int PathSumBranchingBits(const Circuit& circuit);

struct MultiplierCase {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

struct MultiplierCounterexample {
  MultiplierCase input;
  BasisIndex observed_index = 0;
  double observed_magnitude = 0.0;
  std::string reason;
};

struct MultiplierVerification {
  int operand_bits = 0;
  bool exhaustive = true;
  std::int64_t cases_checked = 0;
  std::optional<MultiplierCounterexample> counterexample;

  bool pass() const { return !counterexample.has_value(); }
};

struct MultiplierVerifyOptions {
  // Exhaustive mode needs operand_bits <= 3; sampled mode draws `samples`
  // random (a, b) pairs from `seed`.
  bool exhaustive = true;
  int samples = 32;
  std::uint64_t seed = 0;
  int workers = 1;
};

// Prepares each basis input, simulates with the kernel backend and checks
// that the output is one basis state with P = a*b, ancilla 0 and A, B
// unchanged. Stops at the first failing case.
MultiplierVerification VerifyMultiplier(int operand_bits,
                                        const MultiplierVerifyOptions& options = {});

// Exact check of a single case against an already generated multiplier.
std::optional<MultiplierCounterexample> CheckMultiplierCase(
    const Circuit& multiplier, const Backend& backend, MultiplierCase input);

}  // namespace svsim

#endif  // SVSIM_VERIFY_H_
