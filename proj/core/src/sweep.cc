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

#include "svsim/circuitgen.h"

namespace svsim {

Circuit RemoveQubit(const Circuit& circuit, int qubit) {
  const int n = circuit.num_qubits();
  if (n < 2) throw std::invalid_argument("cannot remove a qubit from a width-1 circuit");
  if (qubit < 0 || qubit >= n) {
    throw std::out_of_range("qubit " + std::to_string(qubit) +
                            " out of range for " + std::to_string(n) +
                            " qubits");
  }
  std::vector<int> mapping(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) mapping[q] = q < qubit ? q : q - 1;

  Circuit reduced(n - 1, circuit.family());
  for (const auto& [key, value] : circuit.metadata()) {
    reduced.SetMetadata(key, value);
  }
  const auto history = circuit.GetMetadata("removed_history");
  reduced.SetMetadata("removed_qubit", std::to_string(qubit));
  reduced.SetMetadata("removed_history",
                      (history && !history->empty() ? *history + "," : "") +
                          std::to_string(qubit));

  for (const Moment& moment : circuit.moments()) {
    Moment kept;
    for (const Gate& gate : moment.gates()) {
      if (!gate.Touches(qubit)) kept.Add(gate.Remapped(mapping));
    }
    if (!kept.empty()) reduced.AddMoment(std::move(kept));
  }
  return reduced;
}

Circuit RemoveRandomQubit(const Circuit& circuit, Rng& rng) {
  if (circuit.num_qubits() < 2) {
    throw std::invalid_argument("cannot remove a qubit from a width-1 circuit");
  }
  const auto qubit = static_cast<int>(
      rng.UniformBelow(static_cast<std::uint64_t>(circuit.num_qubits())));
  return RemoveQubit(circuit, qubit);
}

SweepPlan WidthSweep(const Circuit& base, int min_width, std::uint64_t seed) {
  if (min_width < 1 || min_width >= base.num_qubits()) {
    throw std::invalid_argument(
        "sweep target width " + std::to_string(min_width) +
        " must be in [1, " + std::to_string(base.num_qubits()) + ")");
  }
  SweepPlan plan{base, {}, seed, {}, {}};
  Rng rng(seed);
  const Circuit* current = &base;
  for (int width = base.num_qubits() - 1; width >= min_width; --width) {
    Circuit next = RemoveRandomQubit(*current, rng);
    next.SetMetadata("sweep_seed", std::to_string(seed));
    plan.target_widths.push_back(width);
    plan.removed.push_back(std::stoi(*next.GetMetadata("removed_qubit")));
    plan.circuits.push_back(std::move(next));
    current = &plan.circuits.back();
  }
  return plan;
}

}  // namespace svsim
