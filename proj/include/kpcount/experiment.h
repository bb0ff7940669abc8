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

#ifndef KPCOUNT_EXPERIMENT_H_
#define KPCOUNT_EXPERIMENT_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpcount/dp_count.h"
#include "kpcount/generators.h"
#include "kpcount/instance_io.h"

namespace kpcount {

// Grid of (group, n, R, replicate) instances, each swept over the capacity
// fractions d. The defaults are a desk-scale version of the published grid
// (n up to 500 and 25 replicates per cell).
struct ExperimentConfig {
  std::vector<Group> groups{kAllGroups.begin(), kAllGroups.end()};
  std::vector<int> n_values = {50, 100, 150, 200};
  std::vector<int64_t> upper_values = {25, 50, 100, 500};
  int64_t lower = 1;
  int num_fractions = 11;
  std::vector<int> fractions = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  int replicates = 10;
  uint64_t base_seed = 1;
  TableMode count_mode = TableMode::kTwoRow;
  int threads = 1;
  // Wall time is the one nondeterministic column; off by default so repeated
  // runs produce byte-identical CSV. When off, runtime_ms is 0.
  bool record_runtime = false;
  std::string output;
};

// Throws ParameterError for empty lists, replicates < 1, fractions outside
// [1, D] or L >= R.
void ValidateConfig(const ExperimentConfig& config);

// JSON object whose keys mirror ExperimentConfig: groups, n_values, R_values,
// L, D, d_values, replicates, base_seed, count_mode ("two-row" or "full"),
// threads, record_runtime, output. Missing keys keep their defaults; unknown
// keys are rejected. Throws ParseError.
ExperimentConfig ParseConfigJson(std::string_view text);

// Seed of the instance generated for one grid cell. Capacity fractions share
// the instance, so d is not part of the hash.
uint64_t CellSeed(uint64_t base_seed, Group group, int n, int64_t upper,
                  int replicate);

struct ExperimentResult {
  std::vector<ResultRow> rows;  // sorted, see SortRows
  std::vector<std::string> diagnostics;
};

// One row per (group, n, R, d, replicate). A failing cell is skipped with a
// diagnostic; the rest of the grid still runs. Rows do not depend on the
// thread count.
ExperimentResult RunExperiment(const ExperimentConfig& config);

// By group (declaration order), n, R, d, replicate.
void SortRows(std::vector<ResultRow>& rows);

// Distribution of log2_count over the replicates of one (group, n, R, d)
// cell. Quartiles interpolate linearly between order statistics.
struct SummaryRow {
  Group group = Group::kUncorr;
  int n = 0;
  int64_t upper = 0;
  int d = 0;
  int capacity_pct = 0;
  int replicates = 0;
  double h_ratio = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

inline constexpr std::string_view kSummaryHeader =
    "group,n,R,d,capacity_pct,replicates,h_ratio,log2_min,log2_q1,"
    "log2_median,log2_q3,log2_max";

// Throws UsageError for empty input.
std::vector<SummaryRow> Summarize(std::span<const ResultRow> rows);

std::string FormatSummaryCsv(std::span<const SummaryRow> rows);

// Linear-interpolation quantile of unsorted data, p in [0, 1].
double Quantile(std::vector<double> data, double p);

}  // namespace kpcount

#endif  // KPCOUNT_EXPERIMENT_H_
