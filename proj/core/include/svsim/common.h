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


#ifndef SVSIM_COMMON_H_
#define SVSIM_COMMON_H_

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace svsim {

// One amplitude is two IEEE doubles (16 bytes), laid out as {re, im}.
using Amplitude = std::complex<double>;

// Computational basis index. Qubit k is bit k (little-endian).
using BasisIndex = std::uint64_t;

// Wide enough to hold 2^n * 16 exactly for every supported qubit count.
using ByteCount = unsigned __int128;

// Decimal rendering of a ByteCount.
std::string ToString(ByteCount bytes);

// Human-readable size, e.g. "64 TiB (70368744177664 bytes)".
std::string FormatBytes(ByteCount bytes);

// Raised when a requested state or matrix does not fit in memory.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, ByteCount required_bytes);

  ByteCount required_bytes() const { return required_bytes_; }

 private:
  ByteCount required_bytes_;
};

// Physical memory of the host, used as the allocation ceiling.
ByteCount PhysicalMemoryBytes();

// Multiplies without the NaN/Inf recovery path of std::complex operator*.
inline Amplitude Mul(const Amplitude& a, const Amplitude& b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace svsim

#endif  // SVSIM_COMMON_H_
