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

#ifndef KPCOUNT_CORE_H_
#define KPCOUNT_CORE_H_

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kpcount {

// Exact solution counts. Counts grow like 2^n, so no fixed-width type works.
using Count = mpz_class;

struct Item {
  int64_t weight = 0;
  int64_t value = 0;

  friend bool operator==(const Item&, const Item&) = default;
};

// A 0-1 knapsack instance. Items are addressed 1..n in the public API.
//
// Construction does not validate; call ValidateInstance() or RequireValid()
// before handing an instance to a solver. Every solver entry point does the
// latter itself.
class Instance {
 public:
  Instance() = default;
  Instance(std::vector<Item> items, int64_t capacity)
      : items_(std::move(items)), capacity_(capacity) {}

  int num_items() const { return static_cast<int>(items_.size()); }
  int64_t capacity() const { return capacity_; }
  std::span<const Item> items() const { return items_; }

  // 1-based, matching Solution indices.
  const Item& item(int index) const { return items_[index - 1]; }

  std::vector<int64_t> weights() const;
  std::vector<int64_t> values() const;

  Instance WithCapacity(int64_t capacity) const {
    return Instance(items_, capacity);
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Item> items_;
  int64_t capacity_ = 0;
};

// A subset of item indices, kept sorted ascending. Indices are 1-based.
class Solution {
 public:
  Solution() = default;
  // Throws InvalidSolutionError on duplicates or indices < 1.
  explicit Solution(std::vector<int> indices);
  Solution(std::initializer_list<int> indices)
      : Solution(std::vector<int>(indices)) {}

  std::span<const int> indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool contains(int index) const;

  // Space separated, ascending; empty string for the empty set.
  std::string ToString() const;

  friend bool operator==(const Solution&, const Solution&) = default;
  friend auto operator<=>(const Solution&, const Solution&) = default;

 private:
  std::vector<int> indices_;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

ValidationReport ValidateInstance(const Instance& instance);

// Throws InvalidInstanceError listing every violation.
void RequireValid(const Instance& instance);

// Throws OverflowError unless the sum of all values and the sum of all
// weights fit in int64_t. Every subset total then fits as well.
void RequireRepresentable(const Instance& instance);

// Sums over the indexed items. Throw InvalidSolutionError when an index
// exceeds the instance size.
int64_t TotalWeight(const Solution& solution, const Instance& instance);
int64_t TotalValue(const Solution& solution, const Instance& instance);
bool IsFeasible(const Solution& solution, const Instance& instance);

struct OracleResult {
  int64_t v_max = 0;
  Count count;
  // Ascending by the Solution ordering.
  std::vector<Solution> optima;
};

inline constexpr int kDefaultOracleMaxItems = 24;

// Exhaustive enumeration of all 2^n subsets. Ground truth for small
// instances; throws InstanceTooLargeError when n > max_items.
OracleResult BruteForceOptima(const Instance& instance,
                              int max_items = kDefaultOracleMaxItems);

}  // namespace kpcount

#endif  // KPCOUNT_CORE_H_
