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
#include <set>

#include "redesc/errors.hpp"
#include "redesc/grsc.hpp"
#include "support/oracles.hpp"

namespace redesc {
namespace {

using testing::Rng;

void expect_step_optimal(std::span<const Redescription> pool, const Dataset& d,
                         const WeightVector& w, std::size_t n) {
  const ReducedSet red = reduce_one(pool, w, n, std::nullopt, d.num_elements(), d.num_attributes());
  ASSERT_EQ(red.members.size(), std::min(n, pool.size()));
  EXPECT_EQ(testing::first_suboptimal_step(pool, d, w, n, red.members), -1);

  const OccurrenceProfile prof = compute_occurrence(pool, d.num_elements(), d.num_attributes());
  EXPECT_EQ(find_specific(pool, prof, w), red.members[0]);
  // The incremental maxima in reduce_one agree with full recomputation.
  for (std::size_t step = 1; step < red.members.size(); ++step) {
    const std::vector<std::size_t> chosen(red.members.begin(), red.members.begin() + step);
    EXPECT_EQ(find_best(pool, chosen, w, n, d.num_elements()), red.members[step]);
  }
}

TEST(Grsc, WeightRowsSumToOne) {
  for (auto rows : {default_weight_rows(), missing_value_weight_rows()}) {
    for (const WeightVector& w : rows) {
      double s = 0;
      for (double x : w.to_array()) s += x;
      EXPECT_NEAR(s, 1.0, 1e-12);
    }
  }
  EXPECT_EQ(default_weight_rows().size(), 4u);
  EXPECT_EQ(missing_value_weight_rows().size(), 5u);
  EXPECT_EQ(WeightVector::from_array(default_weight_rows()[1].to_array()), default_weight_rows()[1]);
  WeightVector bad;
  bad.j = -0.1;
  EXPECT_THROW(bad.validate(), ConfigError);
}

TEST(Grsc, OccurrenceRecount) {
  Rng rng(71);
  const Dataset d = testing::random_dataset(rng, 90, 0.1);
  const auto pool = testing::random_pool(rng, d, 120, 3);
  const OccurrenceProfile p = compute_occurrence(pool, d.num_elements(), d.num_attributes());
  std::vector<std::uint32_t> elems(d.num_elements(), 0);
  std::vector<std::uint32_t> attrs(d.num_attributes(), 0);
  std::uint64_t et = 0;
  std::uint64_t at = 0;
  const int v1 = static_cast<int>(d.view1.num_attributes());
  for (const auto& r : pool) {
    for (std::size_t e = 0; e < d.num_elements(); ++e) {
      if (r.tri1().in.test(e) && r.tri2().in.test(e)) {
        ++elems[e];
        ++et;
      }
    }
    for (int a : r.q1().attribute_set()) {
      ++attrs[static_cast<std::size_t>(a)];
      ++at;
    }
    for (int a : r.q2().attribute_set()) {
      ++attrs[static_cast<std::size_t>(a + v1)];
      ++at;
    }
  }
  EXPECT_EQ(p.elements, elems);
  EXPECT_EQ(p.attributes, attrs);
  EXPECT_EQ(p.element_total, et);
  EXPECT_EQ(p.attribute_total, at);
}

class GrscRows : public ::testing::TestWithParam<int> {};

TEST_P(GrscRows, StepOptimalAgainstBruteForce) {
  const int row = GetParam();
  const bool missing = row >= 4;
  const WeightVector w =
      missing ? missing_value_weight_rows()[static_cast<std::size_t>(row - 4)]
              : default_weight_rows()[static_cast<std::size_t>(row)];
  Rng rng(72 + static_cast<std::uint64_t>(row));
  for (int trial = 0; trial < 2; ++trial) {
    const Dataset d = testing::random_dataset(rng, 120, missing ? 0.15 : 0.0);
    const auto pool = testing::random_pool(rng, d, 200, 3);
    expect_step_optimal(pool, d, w, 50);
  }
}

INSTANTIATE_TEST_SUITE_P(WeightRows, GrscRows, ::testing::Range(0, 9));

TEST(Grsc, ReduceHonoursSizeAndFilter) {
  Rng rng(81);
  const Dataset d = testing::random_dataset(rng, 100);
  const auto pool = testing::random_pool(rng, d, 60, 2);
  const auto rows = default_weight_rows();
  const auto sets = reduce_set(pool, rows, 10, std::nullopt, d.num_elements(), d.num_attributes(), 3);
  ASSERT_EQ(sets.size(), rows.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    EXPECT_EQ(sets[i].members.size(), 10u);
    std::set<std::size_t> uniq(sets[i].members.begin(), sets[i].members.end());
    EXPECT_EQ(uniq.size(), 10u);
    const ReducedSet serial = reduce_one(pool, rows[i], 10, std::nullopt, d.num_elements(), d.num_attributes());
    EXPECT_EQ(serial.members, sets[i].members);
  }

  Constraints strict;
  strict.min_jaccard = 0.99;
  strict.min_ref_jaccard = 0.5;
  strict.min_support = 1;
  strict.max_pvalue = 1e-300;
  const ReducedSet none = reduce_one(pool, rows[0], 10, strict, d.num_elements(), d.num_attributes());
  EXPECT_TRUE(none.filtered_out);
  EXPECT_TRUE(none.members.empty());

  Constraints loose;
  loose.min_jaccard = 0.1;
  loose.min_ref_jaccard = 0.1;
  loose.max_pvalue = 1.0;
  loose.min_support = 1;
  const ReducedSet some = reduce_one(pool, rows[0], 200, loose, d.num_elements(), d.num_attributes());
  for (std::size_t m : some.members) EXPECT_TRUE(loose.accepts(pool[m]));
  EXPECT_THROW(reduce_one(pool, rows[0], 0, std::nullopt, d.num_elements(), d.num_attributes()),
               ConfigError);
}

}  // namespace
}  // namespace redesc
