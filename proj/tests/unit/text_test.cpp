// Copyright 2026 The redesc Authors.
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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "redesc/text.hpp"

namespace redesc::text {
namespace {

TEST(Text, FormatDoubleRoundTrips) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 5000; ++i) {
    const double v = i % 3 == 0 ? u(rng) : std::ldexp(u(rng), static_cast<int>(rng() % 200) - 100);
    const auto back = parse_double(format_double(v));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, v);
  }
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Text, ParseDoubleRejectsGarbage) {
  EXPECT_FALSE(parse_double("").has_value());
  EXPECT_FALSE(parse_double("1.5x").has_value());
  EXPECT_FALSE(parse_double("abc").has_value());
  EXPECT_EQ(*parse_double(" 2.25 "), 2.25);
  EXPECT_EQ(*parse_double("-inf"), -std::numeric_limits<double>::infinity());
}

TEST(Text, CsvQuoting) {
  const auto f = split_csv_record(R"(a,"b,c","say ""hi""",)");
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[1], "b,c");
  EXPECT_EQ(f[2], "say \"hi\"");
  EXPECT_EQ(f[3], "");
  EXPECT_EQ(quote_csv("plain"), "plain");
  EXPECT_EQ(split_csv_record(quote_csv("x, \"y\"")).at(0), "x, \"y\"");
}

TEST(Text, CsvRecordsTrackLines) {
  const auto recs = csv_records("h1,h2\n\n1,\"a\nb\"\n2,c\n");
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0].second, 1u);
  EXPECT_EQ(recs[1].second, 3u);
  EXPECT_EQ(recs[2].second, 5u);
}

}  // namespace
}  // namespace redesc::text
