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

#include "kpcount/core.h"

#include <algorithm>
#include <bit>
#include <limits>

#include "kpcount/errors.h"

namespace kpcount {

std::vector<int64_t> Instance::weights() const {
  std::vector<int64_t> out;
  out.reserve(items_.size());
  for (const Item& item : items_) out.push_back(item.weight);
  return out;
}

std::vector<int64_t> Instance::values() const {
  std::vector<int64_t> out;
  out.reserve(items_.size());
  for (const Item& item : items_) out.push_back(item.value);
  return out;
}

Solution::Solution(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (!indices_.empty() && indices_.front() < 1) {
    throw InvalidSolutionError("solution index " +
                               std::to_string(indices_.front()) +
                               " is below 1");
  }
  auto dup = std::adjacent_find(indices_.begin(), indices_.end());
  if (dup != indices_.end()) {
    throw InvalidSolutionError("duplicate solution index " +
                               std::to_string(*dup));
  }
}

bool Solution::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::string Solution::ToString() const {
  std::string out;
  for (int index : indices_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(index);
  }
  return out;
}

ValidationReport ValidateInstance(const Instance& instance) {
  ValidationReport report;
  for (int i = 1; i <= instance.num_items(); ++i) {
    const Item& item = instance.item(i);
    if (item.weight < 1) {
      report.violations.push_back("weight must be ≥ 1 (item " +
                                  std::to_string(i) + ")");
    }
    if (item.value < 0) {
      report.violations.push_back("value must be ≥ 0 (item " +
                                  std::to_string(i) + ")");
    }
  }
  if (instance.capacity() < 0) {
    report.violations.push_back("capacity must be ≥ 0");
  }
  return report;
}

void RequireValid(const Instance& instance) {
  ValidationReport report = ValidateInstance(instance);
  if (report.ok()) return;
  std::string message = "invalid instance:";
  for (const std::string& v : report.violations) message += " " + v + ";";
  message.pop_back();
  throw InvalidInstanceError(message);
}

void RequireRepresentable(const Instance& instance) {
  int64_t weight_sum = 0;
  int64_t value_sum = 0;
  for (const Item& item : instance.items()) {
    if (__builtin_add_overflow(weight_sum, item.weight, &weight_sum)) {
      throw OverflowError("sum of item weights exceeds int64 range");
    }
    if (__builtin_add_overflow(value_sum, item.value, &value_sum)) {
      throw OverflowError("sum of item values exceeds int64 range");
    }
  }
}

namespace {

int64_t CheckedTotal(const Solution& solution, const Instance& instance,
                     int64_t Item::*field) {
  int64_t total = 0;
  for (int index : solution.indices()) {
    if (index > instance.num_items()) {
      throw InvalidSolutionError("solution index " + std::to_string(index) +
                                 " exceeds item count " +
                                 std::to_string(instance.num_items()));
    }
    if (__builtin_add_overflow(total, instance.item(index).*field, &total)) {
      throw OverflowError("solution total exceeds int64 range");
    }
  }
  return total;
}

}  // namespace

int64_t TotalWeight(const Solution& solution, const Instance& instance) {
  return CheckedTotal(solution, instance, &Item::weight);
}

int64_t TotalValue(const Solution& solution, const Instance& instance) {
  return CheckedTotal(solution, instance, &Item::value);
}

bool IsFeasible(const Solution& solution, const Instance& instance) {
  return TotalWeight(solution, instance) <= instance.capacity();
}

OracleResult BruteForceOptima(const Instance& instance, int max_items) {
  RequireValid(instance);
  RequireRepresentable(instance);
  const int n = instance.num_items();
  if (n > max_items || n > 30) {
    throw InstanceTooLargeError(
        "brute force limited to " + std::to_string(std::min(max_items, 30)) +
        " items, instance has " + std::to_string(n));
  }

  // Walk the subsets in Gray-code order so each step flips a single item.
  const uint32_t num_subsets = uint32_t{1} << n;
  uint32_t mask = 0;
  int64_t weight = 0;
  int64_t value = 0;
  int64_t best = 0;  // the empty set is always feasible
  std::vector<uint32_t> best_masks = {0};
  for (uint32_t step = 1; step < num_subsets; ++step) {
    const int bit = std::countr_zero(step);
    const Item& item = instance.item(bit + 1);
    mask ^= uint32_t{1} << bit;
    if (mask & (uint32_t{1} << bit)) {
      weight += item.weight;
      value += item.value;
    } else {
      weight -= item.weight;
      value -= item.value;
    }
    if (weight > instance.capacity() || value < best) continue;
    if (value > best) {
      best = value;
      best_masks.clear();
    }
    best_masks.push_back(mask);
  }

  OracleResult result;
  result.v_max = best;
  result.count = static_cast<unsigned long>(best_masks.size());
  result.optima.reserve(best_masks.size());
  for (uint32_t m : best_masks) {
    std::vector<int> indices;
    for (int i = 0; i < n; ++i) {
      if (m & (uint32_t{1} << i)) indices.push_back(i + 1);
    }
    result.optima.emplace_back(std::move(indices));
  }
  std::sort(result.optima.begin(), result.optima.end());
  return result;
}

}  // namespace kpcount
