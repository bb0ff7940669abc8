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

#include "kpcount/dp_count.h"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "kpcount/errors.h"

namespace kpcount {

namespace {

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr uint64_t kFnvPrime = 0x100000001b3ULL;

void HashWord(uint64_t& state, int64_t word) {
  const auto bits = static_cast<uint64_t>(word);
  for (int byte = 0; byte < 8; ++byte) {
    state ^= (bits >> (8 * byte)) & 0xff;
    state *= kFnvPrime;
  }
}

// Tables larger than a 48-bit address space cannot be allocated anywhere.
constexpr uint64_t kMaxTableBytes = uint64_t{1} << 48;

size_t CheckedCells(uint64_t rows, uint64_t width, uint64_t bytes_per_cell) {
  uint64_t cells = 0;
  uint64_t bytes = 0;
  if (__builtin_mul_overflow(rows, width, &cells) ||
      __builtin_mul_overflow(cells, bytes_per_cell, &bytes) ||
      bytes > kMaxTableBytes) {
    throw OverflowError("dynamic program table of " + std::to_string(rows) +
                        " x " + std::to_string(width) +
                        " cells exceeds addressable memory");
  }
  return static_cast<size_t>(cells);
}

size_t RowWidth(const Instance& instance, uint64_t rows,
                uint64_t bytes_per_cell) {
  const uint64_t width = static_cast<uint64_t>(instance.capacity()) + 1;
  CheckedCells(rows, width, bytes_per_cell);
  return static_cast<size_t>(width);
}

// Row 0 and column 0: the empty set is the unique optimum.
void FillBaseRow(int64_t* values, Count* counts, size_t width) {
  for (size_t w = 0; w < width; ++w) {
    values[w] = 0;
    counts[w] = 1;
  }
}

// One step of the recurrence: row i from row i-1 for item (weight, value).
void FillRow(const Item& item, size_t width, const int64_t* prev_values,
             const Count* prev_counts, int64_t* values, Count* counts) {
  values[0] = 0;
  counts[0] = 1;
  const auto item_weight = static_cast<uint64_t>(item.weight);
  for (size_t w = 1; w < width; ++w) {
    if (item_weight > w) {
      values[w] = prev_values[w];
      counts[w] = prev_counts[w];
      continue;
    }
    const size_t rest = w - item_weight;
    const int64_t leave = prev_values[w];
    const int64_t take = prev_values[rest] + item.value;
    if (leave == take) {
      values[w] = leave;
      mpz_add(counts[w].get_mpz_t(), prev_counts[w].get_mpz_t(),
              prev_counts[rest].get_mpz_t());
    } else if (leave > take) {
      values[w] = leave;
      counts[w] = prev_counts[w];
    } else {
      values[w] = take;
      counts[w] = prev_counts[rest];
    }
  }
}

}  // namespace

uint64_t InstanceFingerprint(const Instance& instance) {
  uint64_t state = kFnvOffset;
  HashWord(state, instance.num_items());
  HashWord(state, instance.capacity());
  for (const Item& item : instance.items()) HashWord(state, item.weight);
  for (const Item& item : instance.items()) HashWord(state, item.value);
  return state;
}

size_t DpTables::Offset(int i, int64_t w) const {
  if (i < 0 || i > num_items_ || w < 0 || w > capacity_) {
    throw std::out_of_range("table index (" + std::to_string(i) + ", " +
                            std::to_string(w) + ") outside (" +
                            std::to_string(num_items_) + ", " +
                            std::to_string(capacity_) + ")");
  }
  if (i < first_row_) {
    throw InsufficientTablesError("row " + std::to_string(i) +
                                  " not retained by two-row tables");
  }
  return static_cast<size_t>(i - first_row_) *
             (static_cast<size_t>(capacity_) + 1) +
         static_cast<size_t>(w);
}

int64_t DpTables::value(int i, int64_t w) const {
  return values_[Offset(i, w)];
}

const Count& DpTables::count(int i, int64_t w) const {
  return counts_[Offset(i, w)];
}

CountResult DpTables::result() const {
  const size_t at = Offset(num_items_, capacity_);
  return CountResult{values_[at], counts_[at]};
}

DpTables BuildTables(const Instance& instance, TableMode mode) {
  RequireValid(instance);
  RequireRepresentable(instance);
  const int n = instance.num_items();
  const uint64_t rows =
      mode == TableMode::kFullTable ? static_cast<uint64_t>(n) + 1 : 2;
  const size_t width =
      RowWidth(instance, rows, sizeof(int64_t) + sizeof(Count));

  DpTables tables;
  tables.num_items_ = n;
  tables.capacity_ = instance.capacity();
  tables.mode_ = mode;
  tables.fingerprint_ = InstanceFingerprint(instance);

  if (mode == TableMode::kFullTable) {
    const size_t cells = static_cast<size_t>(n + 1) * width;
    tables.first_row_ = 0;
    tables.values_.resize(cells);
    tables.counts_.resize(cells);
    int64_t* values = tables.values_.data();
    Count* counts = tables.counts_.data();
    FillBaseRow(values, counts, width);
    for (int i = 1; i <= n; ++i) {
      FillRow(instance.item(i), width, values + (i - 1) * width,
              counts + (i - 1) * width, values + i * width,
              counts + i * width);
    }
    return tables;
  }

  std::vector<int64_t> prev_values(width), values(width);
  std::vector<Count> prev_counts(width), counts(width);
  FillBaseRow(values.data(), counts.data(), width);
  for (int i = 1; i <= n; ++i) {
    std::swap(prev_values, values);
    std::swap(prev_counts, counts);
    FillRow(instance.item(i), width, prev_values.data(), prev_counts.data(),
            values.data(), counts.data());
  }

  if (n == 0) {
    tables.first_row_ = 0;
    tables.values_ = std::move(values);
    tables.counts_ = std::move(counts);
  } else {
    tables.first_row_ = n - 1;
    tables.values_ = std::move(prev_values);
    tables.values_.insert(tables.values_.end(), values.begin(), values.end());
    tables.counts_ = std::move(prev_counts);
    tables.counts_.reserve(2 * width);
    for (Count& c : counts) tables.counts_.push_back(std::move(c));
  }
  return tables;
}

CountResult CountOptima(const Instance& instance, TableMode mode) {
  return BuildTables(instance, mode).result();
}

int64_t OptimalValue(const Instance& instance) {
  RequireValid(instance);
  RequireRepresentable(instance);
  const size_t width = RowWidth(instance, 2, sizeof(int64_t));
  std::vector<int64_t> prev(width, 0), row(width, 0);
  for (int i = 1; i <= instance.num_items(); ++i) {
    std::swap(prev, row);
    const Item& item = instance.item(i);
    const auto item_weight = static_cast<uint64_t>(item.weight);
    row[0] = 0;
    for (size_t w = 1; w < width; ++w) {
      row[w] = prev[w];
      if (item_weight <= w) {
        row[w] = std::max(row[w], prev[w - item_weight] + item.value);
      }
    }
  }
  return row.back();
}

}  // namespace kpcount
