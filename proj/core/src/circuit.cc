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


#include "svsim/circuit.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace svsim {
namespace {

bool ValidMetadataKey(std::string_view key) {
  if (key.empty()) return false;
  return std::all_of(key.begin(), key.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
  });
}

}  // namespace

std::string_view FamilyName(CircuitFamily family) {
  switch (family) {
    case CircuitFamily::kSupremacy:
      return "supremacy";
    case CircuitFamily::kMultiplier:
      return "multiplier";
    case CircuitFamily::kCustom:
      return "custom";
  }
  return "custom";
}

std::optional<CircuitFamily> ParseFamily(std::string_view name) {
  if (name == "supremacy") return CircuitFamily::kSupremacy;
  if (name == "multiplier") return CircuitFamily::kMultiplier;
  if (name == "custom") return CircuitFamily::kCustom;
  return std::nullopt;
}

Moment::Moment(std::vector<Gate> gates) {
  gates_.reserve(gates.size());
  for (Gate& g : gates) Add(std::move(g));
}

void Moment::Add(Gate gate) {
  if (Overlaps(gate)) {
    throw std::invalid_argument("gate overlaps another gate in the moment");
  }
  gates_.push_back(std::move(gate));
}

bool Moment::Touches(int qubit) const {
  return std::any_of(gates_.begin(), gates_.end(),
                     [qubit](const Gate& g) { return g.Touches(qubit); });
}

bool Moment::Overlaps(const Gate& gate) const {
  for (int q : gate.targets()) {
    if (Touches(q)) return true;
  }
  return false;
}

Circuit::Circuit(int num_qubits, CircuitFamily family)
    : num_qubits_(num_qubits), family_(family) {
  if (num_qubits < 1) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
}

std::int64_t Circuit::gate_count() const {
  std::int64_t count = 0;
  for (const Moment& m : moments_) count += static_cast<std::int64_t>(m.size());
  return count;
}

void Circuit::CheckTargets(const Gate& gate) const {
  if (gate.MaxTarget() >= num_qubits_) {
    throw std::out_of_range("gate target " + std::to_string(gate.MaxTarget()) +
                            " out of range for " + std::to_string(num_qubits_) +
                            " qubits");
  }
}

void Circuit::AddMoment(Moment moment) {
  for (const Gate& g : moment.gates()) CheckTargets(g);
  moments_.push_back(std::move(moment));
}

void Circuit::Append(Gate gate) {
  CheckTargets(gate);
  std::size_t slot = 0;
  for (std::size_t m = moments_.size(); m > 0; --m) {
    if (moments_[m - 1].Overlaps(gate)) {
      slot = m;
      break;
    }
  }
  if (slot == moments_.size()) moments_.emplace_back();
  moments_[slot].Add(std::move(gate));
}

void Circuit::SetMetadata(const std::string& key, std::string value) {
  if (!ValidMetadataKey(key)) {
    throw std::invalid_argument("invalid metadata key '" + key + "'");
  }
  if (value.find_first_of("\r\n") != std::string::npos) {
    throw std::invalid_argument("metadata value for '" + key +
                                "' spans lines");
  }
  if (!value.empty() && (std::isspace(static_cast<unsigned char>(value.front())) ||
                         std::isspace(static_cast<unsigned char>(value.back())))) {
    throw std::invalid_argument("metadata value for '" + key +
                                "' has surrounding whitespace");
  }
  metadata_[key] = std::move(value);
}

std::optional<std::string> Circuit::GetMetadata(const std::string& key) const {
  auto it = metadata_.find(key);
  if (it == metadata_.end()) return std::nullopt;
  return it->second;
}

std::vector<Gate> FlattenGates(const Circuit& circuit) {
  std::vector<Gate> out;
  out.reserve(static_cast<std::size_t>(circuit.gate_count()));
  for (const Moment& m : circuit.moments()) {
    out.insert(out.end(), m.gates().begin(), m.gates().end());
  }
  return out;
}

}  // namespace svsim
