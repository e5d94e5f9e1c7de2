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


#ifndef SVSIM_CIRCUIT_H_
#define SVSIM_CIRCUIT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "svsim/gate.h"

namespace svsim {

enum class CircuitFamily { kSupremacy, kMultiplier, kCustom };

std::string_view FamilyName(CircuitFamily family);
std::optional<CircuitFamily> ParseFamily(std::string_view name);

// Gates applied logically at the same time; no qubit appears twice.
class Moment {
 public:
  Moment() = default;
  explicit Moment(std::vector<Gate> gates);

  // Throws std::invalid_argument if `gate` overlaps a gate already present.
  void Add(Gate gate);

  bool Touches(int qubit) const;
  bool Overlaps(const Gate& gate) const;

  const std::vector<Gate>& gates() const { return gates_; }
  bool empty() const { return gates_.empty(); }
  std::size_t size() const { return gates_.size(); }

  friend bool operator==(const Moment&, const Moment&) = default;

 private:
  std::vector<Gate> gates_;
};

// An ordered list of moments over a fixed qubit count, tagged with the
// benchmark family that produced it and free-form string metadata.
class Circuit {
 public:
  explicit Circuit(int num_qubits,
                   CircuitFamily family = CircuitFamily::kCustom);

  int num_qubits() const { return num_qubits_; }
  CircuitFamily family() const { return family_; }
  void set_family(CircuitFamily family) { family_ = family; }

  const std::vector<Moment>& moments() const { return moments_; }
  int depth() const { return static_cast<int>(moments_.size()); }
  std::int64_t gate_count() const;

  // Appends a whole moment (possibly empty). Throws std::out_of_range when a
  // target is >= num_qubits().
  void AddMoment(Moment moment);

  // Places `gate` in the earliest moment after the last one that touches any
  // of its targets, creating a new trailing moment if needed.
  void Append(Gate gate);

  const std::map<std::string, std::string>& metadata() const {
    return metadata_;
  }
  // Keys are [A-Za-z0-9_.-]+ and values are single-line.
  void SetMetadata(const std::string& key, std::string value);
  std::optional<std::string> GetMetadata(const std::string& key) const;
  void EraseMetadata(const std::string& key) { metadata_.erase(key); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void CheckTargets(const Gate& gate) const;

  int num_qubits_;
  CircuitFamily family_;
  std::vector<Moment> moments_;
  std::map<std::string, std::string> metadata_;
};

// Every gate of the circuit in application order.
std::vector<Gate> FlattenGates(const Circuit& circuit);

}  // namespace svsim

#endif  // SVSIM_CIRCUIT_H_
