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


#ifndef SVSIM_RNG_H_
#define SVSIM_RNG_H_

#include <cstdint>
#include <random>

namespace svsim {

// Seedable generator for circuit construction.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. Bounded integers and doubles are derived here rather than through
// <random> distributions, whose algorithms vary between standard libraries,
// so a seed produces the same circuits on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound);

  // Uniform in [0, 1) with 53 random bits.
  double UniformDouble();

  // Standard normal via Box-Muller.
  double Normal();

  // Independent child stream; advances this generator by one draw.
  Rng Split();

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finaliser, used to derive well-mixed seeds from structured input.
std::uint64_t MixSeed(std::uint64_t value);

}  // namespace svsim

#endif  // SVSIM_RNG_H_
