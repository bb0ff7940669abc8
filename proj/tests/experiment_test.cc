// Copyright 2026 The kpcount Authors
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

#include "kpcount/experiment.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "kpcount/errors.h"

namespace kpcount {
namespace {

ExperimentConfig SmallConfig() {
  ExperimentConfig config;
  config.groups = {Group::kSusu, Group::kUncorr};
  config.n_values = {20, 30};
  config.upper_values = {25};
  config.replicates = 3;
  config.base_seed = 99;
  return config;
}

TEST(RunExperimentTest, GridSize) {
  ExperimentConfig config;
  config.groups = {Group::kUncorr, Group::kScorr};
  config.n_values = {50, 100};
  config.upper_values = {25};
  config.replicates = 5;
  const ExperimentResult result = RunExperiment(config);
  EXPECT_EQ(result.rows.size(), 220u);
  EXPECT_TRUE(result.diagnostics.empty());
}

TEST(RunExperimentTest, RowsAreSortedAndSane) {
  const ExperimentResult result = RunExperiment(SmallConfig());
  ASSERT_EQ(result.rows.size(), 2u * 2 * 1 * 11 * 3);
  std::vector<ResultRow> sorted = result.rows;
  SortRows(sorted);
  EXPECT_EQ(FormatResultsCsv(sorted), FormatResultsCsv(result.rows));
  EXPECT_EQ(result.rows.front().group, Group::kUncorr);
  for (const ResultRow& row : result.rows) {
    EXPECT_GE(row.num_optima, 1);
    EXPECT_GE(row.v_max, 0);
    EXPECT_EQ(row.runtime_ms, 0.0);
    EXPECT_DOUBLE_EQ(row.h_ratio, row.n / 25.0);
    EXPECT_EQ(row.capacity_pct, 100 * row.d / 12);
  }
}

TEST(RunExperimentTest, DeterministicCsv) {
  ExperimentConfig config = SmallConfig();
  config.groups = {Group::kSusu};
  EXPECT_EQ(FormatResultsCsv(RunExperiment(config).rows),
            FormatResultsCsv(RunExperiment(config).rows));
}

TEST(RunExperimentTest, ThreadCountDoesNotMatter) {
  ExperimentConfig config = SmallConfig();
  const std::string sequential = FormatResultsCsv(RunExperiment(config).rows);
  config.threads = 3;
  EXPECT_EQ(FormatResultsCsv(RunExperiment(config).rows), sequential);
}

TEST(RunExperimentTest, FullTableModeAgrees) {
  ExperimentConfig config = SmallConfig();
  const std::string lean = FormatResultsCsv(RunExperiment(config).rows);
  config.count_mode = TableMode::kFullTable;
  EXPECT_EQ(FormatResultsCsv(RunExperiment(config).rows), lean);
}

TEST(RunExperimentTest, SeedAudit) {
  const ExperimentConfig config = SmallConfig();
  for (const ResultRow& row : RunExperiment(config).rows) {
    ASSERT_EQ(row.seed, CellSeed(config.base_seed, row.group, row.n,
                                 row.upper, row.replicate));
    const Instance base(
        Generate({row.group, row.n, config.lower, row.upper, row.seed}), 0);
    const Instance inst = base.WithCapacity(
        CapacityAt(base.weights(), row.d, config.num_fractions));
    const CountResult again = CountOptima(inst, TableMode::kFullTable);
    ASSERT_EQ(again.v_max, row.v_max);
    ASSERT_EQ(again.num_optima, row.num_optima);
  }
}

TEST(RunExperimentTest, RuntimeRecordedWhenAsked) {
  ExperimentConfig config = SmallConfig();
  config.record_runtime = true;
  config.n_values = {200};
  double total = 0;
  for (const ResultRow& row : RunExperiment(config).rows) {
    total += row.runtime_ms;
  }
  EXPECT_GT(total, 0.0);
}

TEST(RunExperimentTest, FailingCellIsReportedAndSkipped) {
  ExperimentConfig config;
  config.groups = {Group::kUncorr};
  config.n_values = {4};
  config.upper_values = {10, int64_t{1} << 59};
  config.fractions = {6};
  config.replicates = 1;
  const ExperimentResult result = RunExperiment(config);
  ASSERT_EQ(result.rows.size(), 1u);
  EXPECT_EQ(result.rows[0].upper, 10);
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_NE(result.diagnostics[0].find("uncorr n=4 R=576460752303423488"),
            std::string::npos);
  EXPECT_NE(result.diagnostics[0].find("exceeds addressable memory"),
            std::string::npos);
}

TEST(RunExperimentTest, InvalidConfig) {
  ExperimentConfig config = SmallConfig();
  config.replicates = 0;
  EXPECT_THROW(RunExperiment(config), ParameterError);
  config = SmallConfig();
  config.fractions = {12};
  EXPECT_THROW(RunExperiment(config), ParameterError);
  config = SmallConfig();
  config.groups.clear();
  EXPECT_THROW(RunExperiment(config), ParameterError);
  config = SmallConfig();
  config.upper_values = {1};
  EXPECT_THROW(RunExperiment(config), ParameterError);
}

TEST(CellSeedTest, DistinctPerCoordinate) {
  const uint64_t s = CellSeed(1, Group::kSusu, 50, 25, 0);
  EXPECT_EQ(s, CellSeed(1, Group::kSusu, 50, 25, 0));
  EXPECT_NE(s, CellSeed(2, Group::kSusu, 50, 25, 0));
  EXPECT_NE(s, CellSeed(1, Group::kScorr, 50, 25, 0));
  EXPECT_NE(s, CellSeed(1, Group::kSusu, 51, 25, 0));
  EXPECT_NE(s, CellSeed(1, Group::kSusu, 50, 26, 0));
  EXPECT_NE(s, CellSeed(1, Group::kSusu, 50, 25, 1));
}

TEST(QuantileTest, LinearInterpolation) {
  EXPECT_EQ(Quantile({3, 1, 2}, 0.5), 2.0);
  EXPECT_EQ(Quantile({4, 1, 2, 3}, 0.5), 2.5);
  EXPECT_EQ(Quantile({1, 2, 3, 4, 5}, 0.25), 2.0);
  EXPECT_EQ(Quantile({1, 2}, 0.25), 1.25);
  EXPECT_EQ(Quantile({7}, 0.75), 7.0);
  EXPECT_THROW(Quantile({}, 0.5), UsageError);
}

TEST(SummarizeTest, AllOnesCellIsZero) {
  std::vector<ResultRow> rows(25);
  for (int r = 0; r < 25; ++r) {
    rows[r].group = Group::kUncorr;
    rows[r].n = 10;
    rows[r].upper = 500;
    rows[r].d = 3;
    rows[r].replicate = r;
    rows[r].num_optima = 1;
    rows[r].log2_count = 0.0;
    rows[r].h_ratio = 0.02;
  }
  const std::vector<SummaryRow> summary = Summarize(rows);
  ASSERT_EQ(summary.size(), 1u);
  EXPECT_EQ(summary[0].replicates, 25);
  EXPECT_EQ(summary[0].median, 0.0);
  EXPECT_EQ(summary[0].q1, 0.0);
  EXPECT_EQ(summary[0].q3, 0.0);
  EXPECT_EQ(summary[0].max, 0.0);
  EXPECT_DOUBLE_EQ(summary[0].h_ratio, 0.02);
}

TEST(SummarizeTest, SubsetSumMedianGrowsWithN) {
  ExperimentConfig config;
  config.groups = {Group::kSusu};
  config.n_values = {20, 40, 60};
  config.upper_values = {25};
  config.fractions = {6};
  config.replicates = 7;
  const std::vector<SummaryRow> summary =
      Summarize(RunExperiment(config).rows);
  ASSERT_EQ(summary.size(), 3u);
  EXPECT_LT(summary[0].median, summary[1].median);
  EXPECT_LT(summary[1].median, summary[2].median);
  for (const SummaryRow& s : summary) {
    EXPECT_LE(s.min, s.q1);
    EXPECT_LE(s.q1, s.median);
    EXPECT_LE(s.median, s.q3);
    EXPECT_LE(s.q3, s.max);
  }
}

TEST(SummarizeTest, EmptyInputAndCsv) {
  EXPECT_THROW(Summarize({}), UsageError);
  SummaryRow s;
  s.group = Group::kScorr;
  s.n = 50;
  s.upper = 25;
  s.d = 6;
  s.capacity_pct = 50;
  s.replicates = 3;
  s.h_ratio = 2;
  s.min = 1;
  s.q1 = 1.5;
  s.median = 2;
  s.q3 = 2.5;
  s.max = 3;
  EXPECT_EQ(FormatSummaryCsv(std::vector<SummaryRow>{s}),
            std::string(kSummaryHeader) +
                "\nscorr,50,25,6,50,3,2.000000,1.000000,1.500000,2.000000,"
                "2.500000,3.000000\n");
}

TEST(ParseConfigJsonTest, AllKeys) {
  const ExperimentConfig c = ParseConfigJson(R"({
    "groups": ["susu", "invscorr"], "n_values": [50, 100],
    "R_values": [25], "L": 1, "D": 11, "d_values": [2, 6],
    "replicates": 25, "base_seed": 18446744073709551615,
    "count_mode": "full", "threads": 2, "record_runtime": true,
    "output": "out.csv"})");
  EXPECT_EQ(c.groups, (std::vector<Group>{Group::kSusu, Group::kInvscorr}));
  EXPECT_EQ(c.n_values, (std::vector<int>{50, 100}));
  EXPECT_EQ(c.upper_values, (std::vector<int64_t>{25}));
  EXPECT_EQ(c.fractions, (std::vector<int>{2, 6}));
  EXPECT_EQ(c.replicates, 25);
  EXPECT_EQ(c.base_seed, 18446744073709551615ULL);
  EXPECT_EQ(c.count_mode, TableMode::kFullTable);
  EXPECT_EQ(c.threads, 2);
  EXPECT_TRUE(c.record_runtime);
  EXPECT_EQ(c.output, "out.csv");
}

TEST(ParseConfigJsonTest, DefaultsAndD) {
  const ExperimentConfig c = ParseConfigJson(R"({"D": 5})");
  EXPECT_EQ(c.fractions, (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(c.count_mode, TableMode::kTwoRow);
  EXPECT_EQ(c.groups.size(), 6u);
}

TEST(ParseConfigJsonTest, Errors) {
  EXPECT_THROW(ParseConfigJson("{"), ParseError);
  EXPECT_THROW(ParseConfigJson("[]"), ParseError);
  EXPECT_THROW(ParseConfigJson(R"({"replicate": 3})"), ParseError);
  EXPECT_THROW(ParseConfigJson(R"({"count_mode": "fast"})"), ParseError);
  EXPECT_THROW(ParseConfigJson(R"({"n_values": "50"})"), ParseError);
  EXPECT_THROW(ParseConfigJson(R"({"groups": ["nope"]})"), ParseError);
  EXPECT_THROW(ParseConfigJson(R"({"groups": []})"), ParseError);
  EXPECT_THROW(ParseConfigJson(R"({"d_values": [0]})"), ParseError);
}

}  // namespace
}  // namespace kpcount
