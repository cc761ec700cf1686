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

#include "redesc/refine.hpp"
#include "support/oracles.hpp"

namespace redesc {
namespace {

using testing::Rng;

TEST(Refine, TightenedBoundsKeepTargetInside) {
  Rng rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    const Dataset d = testing::random_dataset(rng, 80, trial % 2 ? 0.1 : 0.0);
    const Redescription ref = Redescription::evaluate(
        testing::random_conjunctive(rng, d.view1, 1, 3),
        testing::random_conjunctive(rng, d.view2, 2, 3), d);
    ElementSet target(d.num_elements());
    ref.support().for_each([&](std::size_t e) {
      if (rng() % 2 == 0) target.set(e);
    });
    const auto t = tighten_bounds(ref, target, d);
    ASSERT_TRUE(t);
    EXPECT_TRUE(target.is_subset_of(t->support()));
    EXPECT_TRUE(t->support().is_subset_of(ref.support()));
    EXPECT_TRUE(t->tri1().in.is_subset_of(ref.tri1().in));
    EXPECT_TRUE(t->tri2().in.is_subset_of(ref.tri2().in));
  }
}

TEST(Refine, TightenRefusesNonConjunctiveQueries) {
  Rng rng(62);
  const Dataset d = testing::random_dataset(rng, 30);
  const Query a = testing::random_conjunctive(rng, d.view1, 1, 2);
  const Query b = testing::random_conjunctive(rng, d.view1, 1, 2);
  EXPECT_FALSE(tighten_query(disjoin(a, b), ElementSet::full(30), d.view1).has_value());
  EXPECT_TRUE(tighten_query(a, ElementSet::full(30), d.view1).has_value());
}

TEST(Refine, TightenShrinksToTargetRange) {
  const View v({{0, "x", AttributeKind::kNumeric, {}}}, {{1.0, 2.0, 3.0, 4.0, 5.0}});
  const Query q = parse_query("[0 <= x <= 10]", v, 1);
  const auto t = tighten_query(q, ElementSet(5, {1, 3}), v);
  ASSERT_TRUE(t);
  EXPECT_EQ(print_query(*t, v), "[2 <= x <= 4]");
  const Query neg = parse_query("![2 <= x <= 3]", v, 1);
  EXPECT_EQ(*tighten_query(neg, ElementSet(5, {0}), v), neg);
}

TEST(Refine, ConjunctionKeepsSupportAndNeverLowersJaccard) {
  Rng rng(63);
  std::size_t checked = 0;
  std::size_t witnessed = 0;
  for (int round = 0; checked < 1000; ++round) {
    ASSERT_LT(round, 200);
    const Dataset d = testing::random_dataset(rng, 60 + rng() % 60, round % 2 ? 0.1 : 0.0);
    for (const auto& [r, ref] : testing::nested_pairs(rng, d, 25)) {
      const RefinementOutcome out = refine_pair(r, ref, d);
      ASSERT_TRUE(out.applied);
      const Redescription& n = out.refined;
      ASSERT_EQ(n.support(), r.support());
      ASSERT_GE(n.jaccard(), r.jaccard());
      EXPECT_EQ(n.tri1(), tri_support(n.q1(), d.view1));
      EXPECT_EQ(n.tri2(), tri_support(n.q2(), d.view2));

      const bool witness = testing::has_witness(r, ref, d);
      if (witness && !r.support().empty()) {
        ++witnessed;
        EXPECT_GT(n.jaccard(), r.jaccard());
        EXPECT_TRUE(out.improved);
      }
      if (!witness) EXPECT_EQ(n.jaccard(), r.jaccard());
      ++checked;
    }
  }
  EXPECT_GT(witnessed, 50u);
}

TEST(Refine, NoRefinementWithoutContainment) {
  Rng rng(64);
  const Dataset d = testing::random_dataset(rng, 80);
  int seen = 0;
  for (int trial = 0; trial < 500 && seen < 50; ++trial) {
    const Redescription r = Redescription::evaluate(
        testing::random_conjunctive(rng, d.view1, 1, 2),
        testing::random_conjunctive(rng, d.view2, 2, 2), d);
    const Redescription ref = Redescription::evaluate(
        testing::random_conjunctive(rng, d.view1, 1, 2),
        testing::random_conjunctive(rng, d.view2, 2, 2), d);
    if (r.support().is_subset_of(ref.support())) continue;
    ++seen;
    const RefinementOutcome out = refine_pair(r, ref, d);
    EXPECT_FALSE(out.applied);
    EXPECT_EQ(out.refined.q1(), r.q1());
    EXPECT_EQ(out.refined.q2(), r.q2());
  }
  EXPECT_GT(seen, 0);
}

TEST(Refine, StrictWitnessOnHandBuiltData) {
  // r: x <= 3 vs b; ref: x <= 5 vs true-everywhere c. Tightening ref to
  // supp(r) = {0, 1} drops element 2 from the q1 side.
  const View v1({{0, "x", AttributeKind::kNumeric, {}}}, {{1.0, 2.0, 3.0, 9.0}});
  const View v2({{0, "b", AttributeKind::kBoolean, {}}, {1, "c", AttributeKind::kBoolean, {}}},
                {{1.0, 1.0, 0.0, 0.0}, {1.0, 1.0, 1.0, 1.0}});
  const Dataset d(v1, v2);
  const Redescription r = Redescription::evaluate(parse_query("[-inf <= x <= 3]", v1, 1),
                                                  parse_query("b", v2, 2), d);
  const Redescription ref = Redescription::evaluate(parse_query("[-inf <= x <= 5]", v1, 1),
                                                    parse_query("c", v2, 2), d);
  ASSERT_DOUBLE_EQ(r.jaccard(), 2.0 / 3.0);
  const RefinementOutcome out = refine_pair(r, ref, d);
  EXPECT_TRUE(out.improved);
  EXPECT_EQ(out.refined.jaccard(), 1.0);
  EXPECT_EQ(out.refined.support(), r.support());
  EXPECT_EQ(print_query(out.refined.q1(), v1), "[1 <= x <= 2]");
}

TEST(Refine, RefineIntoKeepsSetValid) {
  Rng rng(65);
  Constraints c;
  c.min_jaccard = 0.3;
  c.min_ref_jaccard = 0.2;
  c.max_pvalue = 1.0;
  c.min_support = 3;
  for (int trial = 0; trial < 10; ++trial) {
    const Dataset d = testing::random_dataset(rng, 100, trial % 2 ? 0.1 : 0.0);
    RedescriptionSet set;
    for (Redescription& r : testing::random_pool(rng, d, 300, 2)) {
      std::vector<double> before;
      for (const auto& m : set.items()) before.push_back(m.jaccard());
      const std::vector<ElementSet> supports = [&] {
        std::vector<ElementSet> s;
        for (const auto& m : set.items()) s.push_back(m.support());
        return s;
      }();
      refine_into(set, r, c, d);
      // Existing members keep their support and never lose accuracy, unless
      // the insert replaced one with a better Jaccard.
      for (std::size_t i = 0; i < before.size() && i < set.size(); ++i) {
        if (set[i].support() == supports[i]) EXPECT_GE(set[i].jaccard(), before[i]);
      }
    }
    for (const auto& m : set.items()) {
      EXPECT_TRUE(c.accepts(m));
      EXPECT_EQ(m.tri1(), tri_support(m.q1(), d.view1));
      EXPECT_EQ(m.tri2(), tri_support(m.q2(), d.view2));
    }
  }
}

TEST(Refine, ConstructAndRefineRespectsThreshold) {
  Rng rng(66);
  const Dataset d = testing::random_dataset(rng, 120);
  std::vector<RuleEntry> r1;
  std::vector<RuleEntry> r2;
  for (int i = 0; i < 25; ++i) {
    Query q1 = testing::random_conjunctive(rng, d.view1, 1, 2);
    Query q2 = testing::random_conjunctive(rng, d.view2, 2, 2);
    r1.push_back({q1, tri_support(q1, d.view1)});
    r2.push_back({q2, tri_support(q2, d.view2)});
  }
  Constraints c;
  c.min_jaccard = 0.5;
  c.min_ref_jaccard = 0.3;
  c.max_pvalue = 1.0;
  c.min_support = 5;
  RedescriptionSet set;
  construct_and_refine(r1, r2, set, c, d);
  for (const auto& m : set.items()) EXPECT_TRUE(c.accepts(m));
}

}  // namespace
}  // namespace redesc
