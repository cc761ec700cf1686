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

#include <json.hpp>

#include "redesc/evaluation.hpp"
#include "redesc/interchange.hpp"
#include "redesc/text.hpp"
#include "support/cli_runner.hpp"
#include "support/generators.hpp"

namespace redesc {
namespace {

namespace fs = std::filesystem;
using testing::run_cli;
using testing::slurp;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = testing::scratch_dir(::testing::UnitTest::GetInstance()->current_test_info()->name());
    files_ = testing::write_dataset(planted_.data, dir_);
    std::ofstream(dir_ / "run.cfg") << "min_jaccard = 0.9\n"
                                       "min_support = 10\n"
                                       "max_pvalue = 0.01\n"
                                       "max_iter = 5\n"
                                       "sizes = 5, 10\n";
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string base() const {
    return files_.flags() + " --config \"" + (dir_ / "run.cfg").string() + "\"";
  }

  fs::path dir_;
  testing::PlantedData planted_{testing::planted_dataset(13)};
  testing::DataFiles files_;
};

TEST_F(Cli, MissingInputExitsWithTwo) {
  EXPECT_EQ(run_cli("mine --view1 /nonexistent/a.csv --view2 /nonexistent/b.csv --out " +
                    (dir_ / "o").string()),
            2);
  EXPECT_EQ(run_cli("eval /nonexistent/r.tsv " + base()), 2);
  EXPECT_EQ(run_cli("mine " + files_.flags() + " --config /nonexistent/run.cfg"), 2);
}

TEST_F(Cli, BadArgumentsFail) {
  EXPECT_NE(run_cli("mine " + base() + " --operator-mode xor --out " + (dir_ / "o").string()), 0);
  EXPECT_NE(run_cli("frobnicate"), 0);
  std::ofstream(dir_ / "bad.cfg") << "nonsense = 1\n";
  EXPECT_EQ(run_cli("mine " + files_.flags() + " --config \"" + (dir_ / "bad.cfg").string() + "\""), 1);
}

TEST_F(Cli, MineIsDeterministicAndWritesReport) {
  const fs::path a = dir_ / "a";
  const fs::path b = dir_ / "b";
  ASSERT_EQ(run_cli("mine " + base() + " --seed 9 --out " + a.string()), 0);
  ASSERT_EQ(run_cli("mine " + base() + " --seed 9 --workers 3 --out " + b.string()), 0);
  const std::string ra = slurp(a / "redescriptions.tsv");
  EXPECT_EQ(ra, slurp(b / "redescriptions.tsv"));
  EXPECT_FALSE(ra.empty());

  const auto report = nlohmann::json::parse(slurp(a / "report.json"));
  EXPECT_EQ(report["seed"], 9);
  EXPECT_TRUE(report.contains("config_hash"));
  EXPECT_TRUE(report.contains("timing_seconds"));
}

TEST_F(Cli, MineReduceEvalRoundTrip) {
  const fs::path m = dir_ / "m";
  const fs::path r = dir_ / "r";
  const fs::path e = dir_ / "e";
  ASSERT_EQ(run_cli("mine " + base() + " --out " + m.string()), 0);
  ASSERT_EQ(run_cli("reduce " + (m / "redescriptions.tsv").string() + " " + base() +
                    " --out " + r.string()),
            0);
  const fs::path reduced = r / "reduced_r1_n5.tsv";
  ASSERT_TRUE(fs::exists(reduced));
  ASSERT_TRUE(fs::exists(r / "reduce_report.json"));
  ASSERT_EQ(run_cli("eval " + reduced.string() + " " + base() + " --out " + e.string()), 0);

  // Every reduced record reappears byte-for-byte in the mined file.
  const std::string mined = slurp(m / "redescriptions.tsv");
  std::istringstream lines(slurp(reduced));
  std::string line;
  std::size_t records = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++records;
    EXPECT_NE(mined.find(line + "\n"), std::string::npos) << line;
  }
  EXPECT_GT(records, 0u);

  const InterchangeLoad back = load_interchange(reduced, planted_.data);
  const std::string eval_rows = slurp(e / "eval_redescriptions.csv");
  EXPECT_EQ(eval_rows, format_eval_rows(back.items, planted_.data));

  // The statistic fields written by mine match those reported by eval.
  const auto recs = text::csv_records(eval_rows);
  std::istringstream again(slurp(reduced));
  std::size_t i = 1;
  while (std::getline(again, line)) {
    if (line.empty() || line[0] == '#') continue;
    ASSERT_LT(i, recs.size());
    const auto tsv = text::split(line, '\t');
    const auto csv = text::split_csv_record(recs[i].first);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(std::string(tsv[2 + k]), csv[3 + k]);
    EXPECT_EQ(std::string(tsv[6]), csv[9]);
    ++i;
  }
}

}  // namespace
}  // namespace redesc
