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
namespace {

// Emits gates of one B[i]-controlled ripple-carry addition.
class ControlledAdderBuilder {
 public:
  ControlledAdderBuilder(Circuit& circuit, const MultiplierLayout& layout,
                         int control, int borrowed)
      : circuit_(circuit), layout_(layout), control_(control),
        borrowed_(borrowed) {}

  // P[shift .. shift+n-1] += A, carry into P[shift+n] (which must be 0).
  void Add(int shift) {
    const int n = layout_.operand_bits;
    auto carry_in = [&](int j) {
      return j == 0 ? layout_.ancilla() : layout_.a(j - 1);
    };
    for (int j = 0; j < n; ++j) {
      Maj(carry_in(j), layout_.p(shift + j), layout_.a(j));
    }
    ControlledX(layout_.a(n - 1), layout_.p(shift + n));
    for (int j = n - 1; j >= 0; --j) {
      Uma(carry_in(j), layout_.p(shift + j), layout_.a(j));
    }
  }

 private:
  // Majority: z becomes the carry out, y ^= z, x ^= z.
  void Maj(int x, int y, int z) {
    ControlledX(z, y);
    ControlledX(z, x);
    DoublyControlledX(x, y, z);
  }

  // Un-majority and add: restores x and z, leaves the sum bit in y.
  void Uma(int x, int y, int z) {
    DoublyControlledX(x, y, z);
    ControlledX(z, x);
    ControlledX(x, y);
  }

  // X on `target` when control_ and `c` are set.
  void ControlledX(int c, int target) {
    circuit_.Append(Gate::Toffoli(control_, c, target));
  }

  // X on `target` when control_, c1 and c2 are all set. Four Toffolis with a
  // borrowed qubit whose value is restored whatever it was.
  void DoublyControlledX(int c1, int c2, int target) {
    const int d = Borrowed(c1, c2, target);
    circuit_.Append(Gate::Toffoli(c2, d, target));
    circuit_.Append(Gate::Toffoli(control_, c1, d));
    circuit_.Append(Gate::Toffoli(c2, d, target));
    circuit_.Append(Gate::Toffoli(control_, c1, d));
  }

  int Borrowed(int c1, int c2, int target) const {
    auto free = [&](int q) {
      return q != control_ && q != c1 && q != c2 && q != target;
    };
    if (borrowed_ >= 0 && free(borrowed_)) return borrowed_;
    for (int q = 0; q < layout_.width(); ++q) {
      if (free(q)) return q;
    }
    throw std::logic_error("multiplier has no qubit to borrow");
  }

  Circuit& circuit_;
  const MultiplierLayout& layout_;
  int control_;
  int borrowed_;
};

}  // namespace

std::uint64_t MultiplierLayout::Encode(std::uint64_t a_value,
                                       std::uint64_t b_value,
                                       std::uint64_t p_value,
                                       int ancilla_value) const {
  const int n = operand_bits;
  return a_value | (b_value << n) | (p_value << (2 * n)) |
         (static_cast<std::uint64_t>(ancilla_value) << (4 * n));
}

MultiplierLayout::Registers MultiplierLayout::Decode(std::uint64_t index) const {
  const int n = operand_bits;
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return Registers{
      index & mask,
      (index >> n) & mask,
      (index >> (2 * n)) & ((std::uint64_t{1} << (2 * n)) - 1),
      static_cast<int>((index >> (4 * n)) & 1u),
  };
}

Circuit GenerateMultiplier(const MultiplierSpec& spec) {
  const int n = spec.operand_bits;
  if (n < 1 || n > 15) {
    throw std::invalid_argument("operand bits must be in [1, 15], got " +
                                std::to_string(n));
  }
  const MultiplierLayout layout{n};
  Circuit circuit(layout.width(), CircuitFamily::kMultiplier);
  circuit.SetMetadata("operand_bits", std::to_string(n));
  circuit.SetMetadata("depth_constant",
                      std::to_string(kMultiplierDepthConstant));
  for (int i = 0; i < n; ++i) {
    // Another B qubit is idle during row i and serves as the borrowed qubit.
    const int borrowed = n > 1 ? layout.b((i + 1) % n) : -1;
    ControlledAdderBuilder(circuit, layout, layout.b(i), borrowed).Add(i);
  }
  return circuit;
}

Circuit PrepareMultiplierInput(const Circuit& multiplier, std::uint64_t a,
                               std::uint64_t b) {
  const auto bits = multiplier.GetMetadata("operand_bits");
  if (!bits) throw std::invalid_argument("circuit is not a multiplier");
  const MultiplierLayout layout{std::stoi(*bits)};
  const int n = layout.operand_bits;
  if ((a >> n) != 0 || (b >> n) != 0) {
    throw std::out_of_range("operand does not fit in " + std::to_string(n) +
                            " bits");
  }
  Circuit prepared(multiplier.num_qubits(), multiplier.family());
  for (const auto& [key, value] : multiplier.metadata()) {
    prepared.SetMetadata(key, value);
  }
  prepared.SetMetadata("input_a", std::to_string(a));
  prepared.SetMetadata("input_b", std::to_string(b));
  Moment inputs;
  for (int i = 0; i < n; ++i) {
    if ((a >> i) & 1u) inputs.Add(Gate::X(layout.a(i)));
    if ((b >> i) & 1u) inputs.Add(Gate::X(layout.b(i)));
  }
  if (!inputs.empty()) prepared.AddMoment(std::move(inputs));
  for (const Moment& m : multiplier.moments()) prepared.AddMoment(m);
  return prepared;
}

}  // namespace svsim
