// Copyright 2026 The CMAB Lab Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cmab/text.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cmab/errors.h"

namespace cmab {
namespace {

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(1e-5), "1e-05");
  EXPECT_EQ(FormatDouble(2.0), "2");
  EXPECT_EQ(FormatDouble(0.0), "0");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng);
    EXPECT_EQ(ParseDouble(FormatDouble(v), "v"), v);
  }
}

TEST(ParseTest, WholeStringOnly) {
  EXPECT_EQ(ParseInt("42", "n"), 42);
  EXPECT_EQ(ParseInt("+7", "n"), 7);
  EXPECT_EQ(ParseInt("-3", "n"), -3);
  EXPECT_THROW(ParseInt("4x", "n"), InputError);
  EXPECT_THROW(ParseInt("", "n"), InputError);
  EXPECT_THROW(ParseInt("99999999999999999999", "n"), InputError);
  EXPECT_EQ(ParseUint("18446744073709551615", "s"), 18446744073709551615ull);
  EXPECT_THROW(ParseUint("-1", "s"), InputError);
  EXPECT_DOUBLE_EQ(ParseDouble("2.5e-3", "x"), 2.5e-3);
  EXPECT_THROW(ParseDouble("1.0.0", "x"), InputError);
}

TEST(ParseTest, ErrorNamesTheField) {
  try {
    ParseInt("abc", "horizon");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("horizon"), std::string::npos);
  }
}

TEST(TrimSplitTest, Basics) {
  EXPECT_EQ(Trim("  a b \t\n"), "a b");
  EXPECT_EQ(Trim(""), "");
  const auto parts = Split("a,,b", ',');
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], "a");
  EXPECT_EQ(parts[1], "");
  EXPECT_EQ(parts[2], "b");
}

}  // namespace
}  // namespace cmab
