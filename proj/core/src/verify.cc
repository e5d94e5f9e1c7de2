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


#include "svsim/verify.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "svsim/circuitgen.h"

namespace svsim {
namespace {

class PathSummer {
 public:
  PathSummer(const Circuit& circuit, BasisIndex out) : out_(out) {
    for (const Gate& gate : FlattenGates(circuit)) {
      Step step{gate.Matrix(), {}, 0};
      const auto targets = gate.targets();
      for (std::size_t j = 0; j < targets.size(); ++j) {
        step.bits[j] = BasisIndex{1} << targets[j];
        step.mask |= step.bits[j];
      }
      steps_.push_back(std::move(step));
    }
  }

  Amplitude Sum(std::size_t depth, BasisIndex basis, Amplitude weight) const {
    if (depth == steps_.size()) {
      return basis == out_ ? weight : Amplitude(0.0, 0.0);
    }
    const Step& step = steps_[depth];
    const int dim = step.matrix.dim();
    int local_in = 0;
    for (int j = 0; j < step.matrix.num_qubits(); ++j) {
      if (basis & step.bits[j]) local_in |= 1 << j;
    }
    const BasisIndex cleared = basis & ~step.mask;
    Amplitude total(0.0, 0.0);
    for (int local_out = 0; local_out < dim; ++local_out) {
      const Amplitude element = step.matrix(local_out, local_in);
      if (element == Amplitude(0.0, 0.0)) continue;
      BasisIndex next = cleared;
      for (int j = 0; j < step.matrix.num_qubits(); ++j) {
        if (local_out & (1 << j)) next |= step.bits[j];
      }
      total += Sum(depth + 1, next, Mul(weight, element));
    }
    return total;
  }

 private:
  struct Step {
    GateMatrix matrix;
    std::array<BasisIndex, kMaxGateArity> bits;
    BasisIndex mask;
  };

  BasisIndex out_;
  std::vector<Step> steps_;
};

}  // namespace

EquivalenceReport CompareBackends(const Backend& subject,
                                  const Backend& reference,
                                  const Circuit& circuit,
                                  const StateVector& initial, double tolerance) {
  const StateVector a = Simulate(subject, circuit, initial);
  const StateVector b = Simulate(reference, circuit, initial);
  const MaxDifference diff = MaxAbsDifference(a, b);
  EquivalenceReport report;
  report.max_abs_diff = diff.value;
  report.worst_index = diff.index;
  report.tolerance = tolerance;
  report.pass = diff.value <= tolerance;
  return report;
}

EquivalenceReport CompareBackends(const Circuit& circuit,
                                  const StateVector& initial, double tolerance,
                                  int workers) {
  if (circuit.num_qubits() > kDenseMaxQubits) {
    throw ResourceError("backend comparison needs the dense backend, limited "
                        "to " + std::to_string(kDenseMaxQubits) + " qubits",
                        DenseMatrixBytes(circuit.num_qubits()));
  }
  return CompareBackends(KernelBackend(workers), DenseBackend(), circuit,
                         initial, tolerance);
}

Amplitude PathSumAmplitude(const Circuit& circuit, BasisIndex in_index,
                           BasisIndex out_index, const PathSumOptions& options) {
  if (circuit.gate_count() > options.max_gates && !options.override_guard) {
    throw std::invalid_argument(
        "path sum refused: " + std::to_string(circuit.gate_count()) +
        " gates exceeds the guard of " + std::to_string(options.max_gates));
  }
  const int n = circuit.num_qubits();
  const BasisIndex limit = n >= 64 ? ~BasisIndex{0} : (BasisIndex{1} << n);
  if (in_index >= limit || out_index >= limit) {
    throw std::out_of_range("basis index out of range for " +
                            std::to_string(n) + " qubits");
  }
  return PathSummer(circuit, out_index).Sum(0, in_index, Amplitude(1.0, 0.0));
}

int PathSumBranchingBits(const Circuit& circuit) {
  int bits = 0;
  for (const Gate& gate : FlattenGates(circuit)) {
    const GateMatrix m = gate.Matrix();
    int widest = 1;
    for (int col = 0; col < m.dim(); ++col) {
      int nonzero = 0;
      for (int row = 0; row < m.dim(); ++row) {
        if (m(row, col) != Amplitude(0.0, 0.0)) ++nonzero;
      }
      widest = std::max(widest, nonzero);
    }
    bits += std::bit_width(static_cast<unsigned>(widest - 1));
  }
  return bits;
}

std::optional<MultiplierCounterexample> CheckMultiplierCase(
    const Circuit& multiplier, const Backend& backend, MultiplierCase input) {
  const MultiplierLayout layout{std::stoi(*multiplier.GetMetadata("operand_bits"))};
  const Circuit prepared = PrepareMultiplierInput(multiplier, input.a, input.b);
  const StateVector out =
      Simulate(backend, prepared, ZeroState(multiplier.num_qubits()));

  BasisIndex best = 0;
  double best_mag = -1.0;
  for (BasisIndex i = 0; i < out.size(); ++i) {
    const double mag = std::abs(out[i]);
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  MultiplierCounterexample cx{input, best, best_mag, ""};
  if (!(best_mag >= 1.0 - 1e-9)) {
    cx.reason = "output is not a single basis state (largest |amplitude| " +
                std::to_string(best_mag) + ")";
    return cx;
  }
  const auto regs = layout.Decode(best);
  if (regs.p != input.a * input.b) {
    cx.reason = "product register holds " + std::to_string(regs.p) +
                ", expected " + std::to_string(input.a * input.b);
  } else if (regs.ancilla != 0) {
    cx.reason = "ancilla not returned to 0";
  } else if (regs.a != input.a || regs.b != input.b) {
    cx.reason = "operand registers changed to a=" + std::to_string(regs.a) +
                " b=" + std::to_string(regs.b);
  } else {
    return std::nullopt;
  }
  return cx;
}

MultiplierVerification VerifyMultiplier(int operand_bits,
                                        const MultiplierVerifyOptions& options) {
  if (options.exhaustive && operand_bits > 3) {
    throw std::invalid_argument(
        "exhaustive multiplier verification supports up to 3 operand bits; "
        "use sampled mode for wider operands");
  }
  const Circuit multiplier = GenerateMultiplier({operand_bits});
  const KernelBackend backend(options.workers);
  MultiplierVerification result;
  result.operand_bits = operand_bits;
  result.exhaustive = options.exhaustive;

  const std::uint64_t range = std::uint64_t{1} << operand_bits;
  auto check = [&](MultiplierCase c) {
    ++result.cases_checked;
    result.counterexample = CheckMultiplierCase(multiplier, backend, c);
    return result.pass();
  };
  if (options.exhaustive) {
    for (std::uint64_t a = 0; a < range; ++a) {
      for (std::uint64_t b = 0; b < range; ++b) {
        if (!check({a, b})) return result;
      }
    }
  } else {
    Rng rng(options.seed);
    for (int s = 0; s < options.samples; ++s) {
      const MultiplierCase c{rng.UniformBelow(range), rng.UniformBelow(range)};
      if (!check(c)) return result;
    }
  }
  return result;
}

}  // namespace svsim
