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


#include "svsim/state.h"

#include <cmath>

#include <gtest/gtest.h>

namespace svsim {
namespace {

TEST(MemoryEstimate, SixteenBytesPerAmplitude) {
  EXPECT_EQ(MemoryEstimate(1), ByteCount{32});
  EXPECT_EQ(MemoryEstimate(20), ByteCount{16} << 20);
  EXPECT_EQ(ToString(MemoryEstimate(42)), "70368744177664");
  EXPECT_EQ(MemoryEstimate(42), ByteCount{64} << 40);
  // 2^123 * 16 = 2^127 still fits the 128-bit count.
  EXPECT_EQ(MemoryEstimate(kMaxEstimableQubits), ByteCount{1} << 127);
}

TEST(MemoryEstimate, RejectsOutOfRangeWidths) {
  EXPECT_THROW(MemoryEstimate(0), std::invalid_argument);
  EXPECT_THROW(MemoryEstimate(kMaxEstimableQubits + 1), std::invalid_argument);
}

TEST(FormatBytes, ExactUnits) {
  EXPECT_EQ(FormatBytes(MemoryEstimate(42)), "64 TiB (70368744177664 bytes)");
  EXPECT_EQ(FormatBytes(1000), "1000 B");
  EXPECT_EQ(FormatBytes(3072), "3 KiB (3072 bytes)");
}

TEST(Allocate, RefusesAboveLimitWithoutAllocating) {
  try {
    AllocateAmplitudes(40, ByteCount{1} << 30);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.required_bytes(), MemoryEstimate(40));
    EXPECT_NE(std::string(e.what()).find("TiB"), std::string::npos);
  }
  EXPECT_THROW(AllocateAmplitudes(70), ResourceError);
  EXPECT_EQ(AllocateAmplitudes(3).size(), 8u);
}

TEST(ZeroState, IsBasisZero) {
  const StateVector s = ZeroState(4);
  EXPECT_EQ(s.size(), 16u);
  EXPECT_EQ(s[0], Amplitude(1.0));
  for (BasisIndex i = 1; i < s.size(); ++i) EXPECT_EQ(s[i], Amplitude(0.0));
}

TEST(EqualSuperposition, AmplitudeIsTwoToMinusHalfN) {
  // 2^-10 for 20 qubits; every amplitude equal and the state normalised.
  const StateVector s = EqualSuperpositionState(20);
  EXPECT_EQ(s[0], Amplitude(9.765625e-4));
  EXPECT_EQ(s[12345], s[0]);
  EXPECT_NEAR(Norm(s), 1.0, 1e-12);
  const StateVector odd = EqualSuperpositionState(5);
  EXPECT_NEAR(odd[7].real(), 1.0 / std::sqrt(32.0), 1e-16);
  EXPECT_NEAR(Norm(odd), 1.0, 1e-14);
}

TEST(StateVector, ValidatesLength) {
  EXPECT_THROW(StateVector(3, std::vector<Amplitude>(7)), std::invalid_argument);
  EXPECT_THROW(StateVector(0, std::vector<Amplitude>(1)), std::invalid_argument);
}

TEST(BasisAmplitude, BoundsChecked) {
  const StateVector s = ZeroState(2);
  EXPECT_EQ(BasisAmplitude(s, 0), Amplitude(1.0));
  EXPECT_THROW(BasisAmplitude(s, 4), std::out_of_range);
}

TEST(MaxAbsDifference, ReportsWorstIndex) {
  StateVector a = ZeroState(2);
  StateVector b = a;
  b[2] = {0.0, 0.5};
  const MaxDifference d = MaxAbsDifference(a, b);
  EXPECT_DOUBLE_EQ(d.value, 0.5);
  EXPECT_EQ(d.index, 2u);
  EXPECT_FALSE(BitIdentical(a, b));
  EXPECT_TRUE(BitIdentical(a, a));
  EXPECT_THROW(MaxAbsDifference(a, ZeroState(3)), std::invalid_argument);
}

TEST(BitIdentical, DistinguishesSignedZero) {
  StateVector a = ZeroState(1);
  StateVector b = a;
  b[1] = {-0.0, 0.0};
  EXPECT_TRUE(a == b);
  EXPECT_FALSE(BitIdentical(a, b));
}

}  // namespace
}  // namespace svsim
