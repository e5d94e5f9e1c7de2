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


#ifndef SVSIM_BACKEND_H_
#define SVSIM_BACKEND_H_

#include <memory>
#include <string_view>
#include <vector>

#include "svsim/circuit.h"
#include "svsim/state.h"

namespace svsim {

// Gate application engine. Every backend implements the same semantics:
// a gate on targets (t0, t1, t2) applies its matrix with local index bit j
// taken from basis bit t_j, identity elsewhere. Backends hold no mutable
// state and may be shared across threads; a StateVector must only be
// mutated by one caller at a time.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual std::string_view name() const = 0;

  // Applies one gate in place. Throws std::out_of_range for a target
  // outside the state.
  virtual void Apply(StateVector& state, const Gate& gate) const = 0;

  // Applies every gate of a moment. The default applies them one by one.
  virtual void ApplyMoment(StateVector& state, const Moment& moment) const;
};

// Runs every moment of `circuit` in order on `initial` and returns the final
// state. Throws std::invalid_argument when the widths differ.
StateVector Simulate(const Backend& backend, const Circuit& circuit,
                     StateVector initial);

// Gate-local kernels over bit-masked amplitude groups, data-parallel across
// `workers` OpenMP threads. Each group is written by exactly one thread, so
// results are bit-identical for every worker count.
class KernelBackend final : public Backend {
 public:
  explicit KernelBackend(int workers = DefaultWorkers());

  std::string_view name() const override { return "kernel"; }
  void Apply(StateVector& state, const Gate& gate) const override;

  int workers() const { return workers_; }

  static int DefaultWorkers();

 private:
  int workers_;
};

void ApplyGateKernel(StateVector& state, const Gate& gate, int workers = 1);

// 2^n x 2^n embedding of one moment, row-major.
class MomentMatrix {
 public:
  explicit MomentMatrix(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return std::size_t{1} << num_qubits_; }

  Amplitude& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim() + col];
  }
  const Amplitude& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim() + col];
  }

  // state <- M * state, summing each row in ascending column order.
  void Apply(StateVector& state) const;

  // max |(M^dagger M - I)_{ij}|; O(8^n), for small n only.
  double UnitarityError() const;

 private:
  friend MomentMatrix BuildMomentMatrix(const Moment&, int);
  void Fill(const Moment& moment);

  int num_qubits_;
  std::vector<Amplitude> entries_;
};

// Widest state the dense path accepts: a 2^13 x 2^13 matrix is 1 GiB.
inline constexpr int kDenseMaxQubits = 13;

// Bytes for a 2^n x 2^n complex matrix.
ByteCount DenseMatrixBytes(int num_qubits);

// Tensor-product embedding of every gate in `moment`, identity on untouched
// qubits. Throws ResourceError for n > kDenseMaxQubits.
MomentMatrix BuildMomentMatrix(const Moment& moment, int num_qubits);

// Reference semantics: materialises the embedded matrix and multiplies.
void ApplyGateDense(StateVector& state, const Gate& gate);

// Oracle backend that multiplies by explicit moment matrices.
class DenseBackend final : public Backend {
 public:
  std::string_view name() const override { return "dense"; }
  void Apply(StateVector& state, const Gate& gate) const override;
  void ApplyMoment(StateVector& state, const Moment& moment) const override;
};

// "kernel" or "dense"; throws std::invalid_argument otherwise.
std::unique_ptr<Backend> MakeBackend(std::string_view name,
                                     int workers = KernelBackend::DefaultWorkers());

std::vector<std::string_view> BackendNames();

}  // namespace svsim

#endif  // SVSIM_BACKEND_H_
