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

StateVector Simulate(const Backend& backend, const Circuit& circuit,
                     StateVector initial) {
  if (circuit.num_qubits() != initial.num_qubits()) {
    throw std::invalid_argument(
        "circuit has " + std::to_string(circuit.num_qubits()) +
        " qubits but the initial state has " +
        std::to_string(initial.num_qubits()));
  }
  for (const Moment& moment : circuit.moments()) {
    backend.ApplyMoment(initial, moment);
  }
  return initial;
}

std::unique_ptr<Backend> MakeBackend(std::string_view name, int workers) {
  if (name == "kernel") return std::make_unique<KernelBackend>(workers);
  if (name == "dense") return std::make_unique<DenseBackend>();
  throw std::invalid_argument("unknown backend '" + std::string(name) +
                              "' (expected kernel or dense)");
}

std::vector<std::string_view> BackendNames() { return {"kernel", "dense"}; }

}  // namespace svsim
