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


#include <array>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

#include "svsim/circuitgen.h"

namespace svsim {
namespace {

// Cycle order of the eight coupler patterns: alternating horizontal and
// vertical couplings, stepping the stagger offset through 0..3.
constexpr std::array<int, 8> kPatternOrder = {0, 3, 2, 1, 4, 7, 6, 5};

constexpr std::array<GateKind, 3> kSingleQubitSet = {
    GateKind::kSqrtX, GateKind::kSqrtY, GateKind::kT};

}  // namespace

std::vector<std::pair<int, int>> GridCzPattern(const GridSpec& spec, int cycle) {
  const int pattern = kPatternOrder[static_cast<std::size_t>(cycle % 8)];
  const int dir_row = pattern % 2;
  const int dir_col = 1 - dir_row;
  const int shift = (pattern >> 1) % 4;
  std::vector<std::pair<int, int>> pairs;
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      const int r2 = r + dir_row;
      const int c2 = c + dir_col;
      if (r2 >= spec.rows || c2 >= spec.cols) continue;
      if ((r * (2 - dir_row) + c * (2 - dir_col)) % 4 != shift) continue;
      pairs.emplace_back(GridQubit(spec, r, c), GridQubit(spec, r2, c2));
    }
  }
  return pairs;
}

Circuit GenerateSupremacy(const GridSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1 || spec.rows * spec.cols < 2) {
    throw std::invalid_argument("supremacy grid needs at least two qubits");
  }
  if (spec.depth < 1) {
    throw std::invalid_argument("supremacy circuit needs at least one cycle");
  }
  const int n = spec.rows * spec.cols;
  Circuit circuit(n, CircuitFamily::kSupremacy);
  circuit.SetMetadata("rows", std::to_string(spec.rows));
  circuit.SetMetadata("cols", std::to_string(spec.cols));
  circuit.SetMetadata("cycles", std::to_string(spec.depth));
  circuit.SetMetadata("seed", std::to_string(spec.seed));

  Moment hadamards;
  for (int q = 0; q < n; ++q) hadamards.Add(Gate::H(q));
  circuit.AddMoment(std::move(hadamards));

  Rng rng(spec.seed);
  std::vector<std::optional<GateKind>> last(static_cast<std::size_t>(n));
  for (int cycle = 0; cycle < spec.depth; ++cycle) {
    std::vector<bool> coupled(static_cast<std::size_t>(n), false);
    Moment cz_layer;
    for (const auto& [a, b] : GridCzPattern(spec, cycle)) {
      cz_layer.Add(Gate::CZ(a, b));
      coupled[static_cast<std::size_t>(a)] = true;
      coupled[static_cast<std::size_t>(b)] = true;
    }
    circuit.AddMoment(std::move(cz_layer));

    Moment single_layer;
    for (int q = 0; q < n; ++q) {
      if (coupled[static_cast<std::size_t>(q)]) continue;
      auto& previous = last[static_cast<std::size_t>(q)];
      GateKind kind = GateKind::kT;
      if (previous) {
        std::array<GateKind, 2> options{};
        std::size_t count = 0;
        for (GateKind k : kSingleQubitSet) {
          if (k != *previous) options[count++] = k;
        }
        kind = options[rng.UniformBelow(count)];
      }
      previous = kind;
      single_layer.Add(Gate(kind, {q}));
    }
    circuit.AddMoment(std::move(single_layer));
  }
  return circuit;
}

GridSpec SmallestGridFor(int width, int depth, std::uint64_t seed) {
  if (width < 1) throw std::invalid_argument("grid width must be positive");
  GridSpec best{0, 0, depth, seed};
  auto key = [](int rows, int cols) {
    return std::make_tuple(rows * cols, rows - cols);
  };
  auto best_key = std::make_tuple(std::numeric_limits<int>::max(), 0);
  for (int cols = 1; cols <= width; ++cols) {
    for (int rows = cols; rows <= cols + 3; ++rows) {
      if (rows * cols < std::max(width, 2)) continue;
      if (key(rows, cols) < best_key) {
        best_key = key(rows, cols);
        best.rows = rows;
        best.cols = cols;
      }
    }
  }
  return best;
}

}  // namespace svsim
