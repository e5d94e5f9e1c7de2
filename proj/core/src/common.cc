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


#include "svsim/common.h"

#include <unistd.h>

#include <algorithm>
#include <array>

namespace svsim {

std::string ToString(ByteCount bytes) {
  if (bytes == 0) return "0";
  std::string digits;
  while (bytes != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(bytes % 10)));
    bytes /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string FormatBytes(ByteCount bytes) {
  static constexpr std::array<const char*, 9> kUnits = {
      "B", "KiB", "MiB", "GiB", "TiB", "PiB", "EiB", "ZiB", "YiB"};
  std::size_t unit = 0;
  ByteCount scaled = bytes;
  // Only collapse to a unit when the value is an exact multiple.
  while (unit + 1 < kUnits.size() && scaled >= 1024 && scaled % 1024 == 0) {
    scaled /= 1024;
    ++unit;
  }
  std::string out = ToString(scaled) + " " + kUnits[unit];
  if (unit != 0) out += " (" + ToString(bytes) + " bytes)";
  return out;
}

ResourceError::ResourceError(const std::string& what, ByteCount required_bytes)
    : std::runtime_error(what), required_bytes_(required_bytes) {}

ByteCount PhysicalMemoryBytes() {
  const long pages = sysconf(_SC_PHYS_PAGES);
  const long page_size = sysconf(_SC_PAGE_SIZE);
  if (pages <= 0 || page_size <= 0) return ~ByteCount{0};
  return static_cast<ByteCount>(pages) * static_cast<ByteCount>(page_size);
}

}  // namespace svsim
