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

#include <filesystem>

#include "redesc/errors.hpp"
#include "redesc/evaluation.hpp"
#include "redesc/interchange.hpp"
#include "redesc/run_config.hpp"
#include "support/generators.hpp"

namespace redesc {
namespace {

using testing::Rng;

TEST(Interchange, RecordsRoundTripExactly) {
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Dataset d = testing::random_dataset(rng, 70, trial % 2 ? 0.1 : 0.0);
    std::vector<Redescription> items = testing::random_pool(rng, d, 30, 3);
    for (int i = 0; i < 5; ++i) {
      items.push_back(Redescription::evaluate(canonicalize(testing::random_query(rng, d.view1, 1)),
                                              canonicalize(testing::random_query(rng, d.view2, 2)),
                                              d));
    }
    const std::string text = format_interchange(items, d);
    const InterchangeLoad back = parse_interchange(text, d);
    EXPECT_TRUE(back.rejects.empty());
    ASSERT_EQ(back.items.size(), items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
      EXPECT_EQ(back.items[i].stats(), items[i].stats());
      EXPECT_EQ(back.items[i].support(), items[i].support());
    }
    EXPECT_EQ(format_interchange(back.items, d), text);
  }
}

TEST(Interchange, RejectsBadRecordsIndividually) {
  Rng rng(102);
  const Dataset d = testing::random_dataset(rng, 30);
  const std::string text = std::string(kInterchangeHeader) +
                           "\n"
                           "xb0\tyb0\n"
                           "garbage\n"
                           "\n"
                           "[0 <= nope <= 1]\tyb0\n"
                           "xb1\tyb1\t0.5\n";
  const InterchangeLoad l = parse_interchange(text, d, "f.tsv");
  EXPECT_EQ(l.items.size(), 2u);
  ASSERT_EQ(l.rejects.size(), 2u);
  EXPECT_EQ(l.rejects[0].line, 3u);
  EXPECT_EQ(l.rejects[1].line, 5u);
  EXPECT_EQ(l.rejects[0].source, "f.tsv");
}

TEST(Interchange, MissingFileThrows) {
  Rng rng(103);
  const Dataset d = testing::random_dataset(rng, 10);
  EXPECT_THROW(load_interchange("/nonexistent/redescriptions.tsv", d), Error);
}

TEST(Interchange, FileRoundTrip) {
  Rng rng(104);
  const Dataset d = testing::random_dataset(rng, 40);
  const auto items = testing::random_pool(rng, d, 10);
  const auto path = std::filesystem::temp_directory_path() / "redesc_interchange_test.tsv";
  write_interchange(path, items, d);
  const InterchangeLoad l = load_interchange(path, d);
  ASSERT_EQ(l.items.size(), items.size());
  for (std::size_t i = 0; i < items.size(); ++i) EXPECT_EQ(l.items[i].stats(), items[i].stats());
  std::filesystem::remove(path);
}

TEST(Evaluation, SummaryMatchesDirectComputation) {
  Rng rng(105);
  const Dataset d = testing::random_dataset(rng, 60, 0.1);
  const auto items = testing::random_pool(rng, d, 12);
  const SetSummary s = summarize(items, d);
  EXPECT_EQ(s.size, items.size());
  ElementSet covered(d.num_elements());
  double j = 0;
  double aej = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    covered |= items[i].support();
    j += items[i].jaccard();
    aej += average_element_jaccard(i, items);
  }
  EXPECT_DOUBLE_EQ(s.element_coverage, static_cast<double>(covered.count()) / d.num_elements());
  EXPECT_NEAR(s.mean_jaccard, j / items.size(), 1e-12);
  EXPECT_NEAR(s.mean_aej, aej / items.size(), 1e-12);
  EXPECT_EQ(floored_log10_pvalue(0.0), -17.0);
  EXPECT_EQ(floored_log10_pvalue(1.0), 0.0);

  const std::string rows = format_eval_rows(items, d);
  EXPECT_EQ(std::count(rows.begin(), rows.end(), '\n'), static_cast<long>(items.size()) + 1);
  const std::string sum = format_eval_summary(s);
  EXPECT_EQ(std::count(sum.begin(), sum.end(), '\n'), 2);

  const std::vector<Redescription> one(items.begin(), items.begin() + 1);
  const SetSummary single = summarize(one, d);
  EXPECT_EQ(single.mean_aej, 0.0);
  EXPECT_EQ(single.mean_aaj, 0.0);
}

TEST(Config, TextRoundTrip) {
  const RunConfig c = parse_config(
      "# sample\n"
      "view1 = a.csv\n"
      "view2 = b.csv\n"
      "min_jaccard = 0.7\n"
      "max_pvalue = 0.001\n"
      "min_support = 12\n"
      "operator_mode = all\n"
      "refine = false\n"
      "seed = 42\n"
      "weights = 0.2, 0.2, 0.2, 0.2, 0.2, 0\n"
      "weights = 0.6, 0.2, 0, 0, 0.2, 0\n"
      "sizes = 10, 20\n",
      "/data");
  EXPECT_EQ(c.view1, std::filesystem::path("/data/a.csv"));
  EXPECT_EQ(c.constraints.min_jaccard, 0.7);
  EXPECT_EQ(c.constraints.min_support, 12u);
  EXPECT_EQ(c.mining.operator_mode, OperatorMode::kAll);
  EXPECT_FALSE(c.mining.use_refinement);
  EXPECT_EQ(c.mining.seed, 42u);
  ASSERT_EQ(c.weights.size(), 2u);
  EXPECT_EQ(c.weights[1].j, 0.6);
  EXPECT_EQ(c.sizes, (std::vector<std::size_t>{10, 20}));

  const RunConfig back = parse_config(c.to_text());
  EXPECT_EQ(back.to_text(), c.to_text());
  EXPECT_EQ(back.hash(), c.hash());
  RunConfig other = c;
  other.mining.seed = 43;
  EXPECT_NE(other.hash(), c.hash());
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_config("bogus = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("min_jaccard = high\n"), ConfigError);
  EXPECT_THROW(parse_config("weights = 1, 2\n"), ConfigError);
  EXPECT_THROW(parse_config("no equals sign\n"), ConfigError);
  EXPECT_THROW(parse_config("min_jaccard = 2\n").validate(), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/run.cfg"), ConfigError);
  try {
    parse_config("seed = 1\nmax_iter = x\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_EQ(default_reduced_sizes().front(), 25u);
  EXPECT_EQ(default_reduced_sizes().back(), 200u);
}

}  // namespace
}  // namespace redesc
