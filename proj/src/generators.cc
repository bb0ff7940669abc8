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

#include "kpcount/generators.h"

#include <algorithm>
#include <string>

#include "kpcount/errors.h"
#include "kpcount/rng.h"

namespace kpcount {

std::string_view GroupName(Group group) {
  switch (group) {
    case Group::kUncorr:
      return "uncorr";
    case Group::kWcorr:
      return "wcorr";
    case Group::kAscorr:
      return "ascorr";
    case Group::kScorr:
      return "scorr";
    case Group::kSusu:
      return "susu";
    case Group::kInvscorr:
      return "invscorr";
  }
  return "unknown";
}

Group ParseGroup(std::string_view name) {
  for (Group group : kAllGroups) {
    if (GroupName(group) == name) return group;
  }
  throw ParameterError("unknown instance group '" + std::string(name) + "'");
}

int64_t LargeOffset(int64_t upper) { return std::max<int64_t>(1, upper / 10); }

int64_t SmallOffset(int64_t upper) {
  return std::max<int64_t>(1, upper / 500);
}

void ValidateSpec(const GeneratorSpec& spec) {
  if (spec.n < 1) throw ParameterError("n must be ≥ 1");
  if (spec.lower < 1) throw ParameterError("L must be ≥ 1");
  if (spec.lower >= spec.upper) throw ParameterError("L must be < R");
  // Keeps w + d1 + d2 far from overflow.
  if (spec.upper > (int64_t{1} << 60)) throw ParameterError("R too large");
}

std::vector<Item> Generate(const GeneratorSpec& spec) {
  ValidateSpec(spec);
  const int64_t d1 = LargeOffset(spec.upper);
  const int64_t d2 = SmallOffset(spec.upper);
  RandomEngine engine = Substream(spec.seed, 0);
  auto draw = [&] { return UniformInt(engine, spec.lower, spec.upper); };

  std::vector<Item> items;
  items.reserve(static_cast<size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    Item item;
    if (spec.group == Group::kInvscorr) {
      item.value = draw();
      item.weight = item.value + d1;
      items.push_back(item);
      continue;
    }
    item.weight = draw();
    switch (spec.group) {
      case Group::kUncorr:
        item.value = draw();
        break;
      case Group::kWcorr:
        item.value = std::max<int64_t>(
            1, UniformInt(engine, item.weight - d1, item.weight + d1));
        break;
      case Group::kAscorr:
        item.value =
            UniformInt(engine, item.weight + d1 - d2, item.weight + d1 + d2);
        break;
      case Group::kScorr:
        item.value = item.weight + d1;
        break;
      case Group::kSusu:
        item.value = item.weight;
        break;
      case Group::kInvscorr:
        break;
    }
    items.push_back(item);
  }
  return items;
}

CapacitySeries CapacitySeries::All(int num_fractions) {
  CapacitySeries series;
  series.num_fractions = num_fractions;
  series.fractions.clear();
  for (int d = 1; d <= num_fractions; ++d) series.fractions.push_back(d);
  return series;
}

int64_t CapacityAt(std::span<const int64_t> weights, int d,
                   int num_fractions) {
  if (num_fractions < 1) throw ParameterError("D must be ≥ 1");
  if (d < 1 || d > num_fractions) {
    throw ParameterError("capacity fraction d=" + std::to_string(d) +
                         " outside [1, " + std::to_string(num_fractions) +
                         "]");
  }
  __int128 sum = 0;
  for (int64_t w : weights) sum += w;
  return static_cast<int64_t>(sum * d / (num_fractions + 1));
}

std::vector<int64_t> CapacitySeriesValues(std::span<const int64_t> weights,
                                          const CapacitySeries& series) {
  if (weights.empty()) throw ParameterError("capacity series needs weights");
  std::vector<int> fractions = series.fractions;
  std::sort(fractions.begin(), fractions.end());
  std::vector<int64_t> capacities;
  capacities.reserve(fractions.size());
  for (int d : fractions) {
    capacities.push_back(CapacityAt(weights, d, series.num_fractions));
  }
  return capacities;
}

CapacityCliff PathologicalInstance(int n) {
  if (n < 4 || n % 2 != 0) {
    throw ParameterError("pathological instance needs an even n ≥ 4, got " +
                         std::to_string(n));
  }
  std::vector<Item> items(static_cast<size_t>(n - 1), Item{1, 1});
  items.push_back(Item{n / 2 + 1, n / 2 + 2});
  return CapacityCliff{Instance(std::move(items), n / 2), n / 2 + 1};
}

Instance StructuredSubsetSum(int n, int64_t upper) {
  if (n < 1 || upper < 1 || n % (2 * upper) != 0) {
    throw ParameterError("structured subset sum needs n divisible by 2R (n=" +
                         std::to_string(n) + ", R=" + std::to_string(upper) +
                         ")");
  }
  const int64_t copies = n / upper;
  std::vector<Item> items;
  items.reserve(static_cast<size_t>(n));
  int64_t sum = 0;
  for (int64_t w = 1; w <= upper; ++w) {
    for (int64_t c = 0; c < copies; ++c) items.push_back(Item{w, w});
    sum += copies * w;
  }
  return Instance(std::move(items), sum / 2);
}

}  // namespace kpcount
