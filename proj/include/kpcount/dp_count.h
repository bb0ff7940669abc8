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

#ifndef KPCOUNT_DP_COUNT_H_
#define KPCOUNT_DP_COUNT_H_

#include <cstdint>
#include <vector>

#include "kpcount/core.h"

namespace kpcount {

enum class TableMode {
  kFullTable,  // all n+1 rows; required by the sampler
  kTwoRow,     // rows n-1 and n only; memory proportional to W
};

struct CountResult {
  int64_t v_max = 0;
  Count num_optima;

  friend bool operator==(const CountResult&, const CountResult&) = default;
};

// FNV-1a over (n, W, weights, values), each as a little-endian int64.
uint64_t InstanceFingerprint(const Instance& instance);

// Value table V and count table C of the counting dynamic program.
//
// V(i, w) is the best profit using items 1..i under capacity w and C(i, w)
// the number of distinct subsets of 1..i attaining it. Immutable once built;
// safe to share across threads.
class DpTables {
 public:
  int num_items() const { return num_items_; }
  int64_t capacity() const { return capacity_; }
  TableMode mode() const { return mode_; }
  uint64_t fingerprint() const { return fingerprint_; }

  // Rows available in this table, [first_row(), num_items()].
  int first_row() const { return first_row_; }
  bool has_row(int i) const { return i >= first_row_ && i <= num_items_; }

  // Throws InsufficientTablesError for rows dropped in two-row mode and
  // std::out_of_range for indices outside the table.
  int64_t value(int i, int64_t w) const;
  const Count& count(int i, int64_t w) const;

  // (V(n, W), C(n, W)).
  CountResult result() const;

 private:
  friend DpTables BuildTables(const Instance& instance, TableMode mode);

  size_t Offset(int i, int64_t w) const;

  int num_items_ = 0;
  int64_t capacity_ = 0;
  TableMode mode_ = TableMode::kFullTable;
  uint64_t fingerprint_ = 0;
  int first_row_ = 0;
  std::vector<int64_t> values_;  // row-major, (W+1) entries per row
  std::vector<Count> counts_;
};

// Fills both tables row by row (items outer, capacities inner). Throws
// InvalidInstanceError for invalid instances and OverflowError when the
// value sums or the table size are not representable.
DpTables BuildTables(const Instance& instance,
                     TableMode mode = TableMode::kFullTable);

CountResult CountOptima(const Instance& instance,
                        TableMode mode = TableMode::kTwoRow);

// Optimal profit only, via the two-row value recurrence (no count table).
int64_t OptimalValue(const Instance& instance);

}  // namespace kpcount

#endif  // KPCOUNT_DP_COUNT_H_
