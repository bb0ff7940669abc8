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

#ifndef KPCOUNT_GENERATORS_H_
#define KPCOUNT_GENERATORS_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "kpcount/core.h"

namespace kpcount {

// Random instance families. Declaration order is the canonical sort order
// used by the experiment harness.
enum class Group { kUncorr, kWcorr, kAscorr, kScorr, kSusu, kInvscorr };

inline constexpr std::array<Group, 6> kAllGroups = {
    Group::kUncorr, Group::kWcorr, Group::kAscorr,
    Group::kScorr,  Group::kSusu,  Group::kInvscorr};

std::string_view GroupName(Group group);
// Accepts the tags returned by GroupName; throws ParameterError otherwise.
Group ParseGroup(std::string_view name);

struct GeneratorSpec {
  Group group = Group::kUncorr;
  int n = 1;
  int64_t lower = 1;  // L
  int64_t upper = 2;  // R
  uint64_t seed = 0;
};

// Offsets shared by the correlated groups: max(1, floor(R/10)) and
// max(1, floor(R/500)).
int64_t LargeOffset(int64_t upper);
int64_t SmallOffset(int64_t upper);

// Throws ParameterError unless n >= 1 and 1 <= L < R.
void ValidateSpec(const GeneratorSpec& spec);

// n items drawn from Substream(spec.seed, 0), one item at a time. Weights
// come first except for kInvscorr, which draws the value first.
//
//   uncorr    w ~ U{L..R}, v ~ U{L..R}
//   wcorr     w ~ U{L..R}, v ~ U{w-d1..w+d1}, then v = max(v, 1)
//   ascorr    w ~ U{L..R}, v ~ U{w+d1-d2..w+d1+d2}
//   scorr     w ~ U{L..R}, v = w + d1
//   susu      w ~ U{L..R}, v = w
//   invscorr  v ~ U{L..R}, w = v + d1
std::vector<Item> Generate(const GeneratorSpec& spec);

struct CapacitySeries {
  int num_fractions = 11;  // D
  std::vector<int> fractions = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};  // d

  static CapacitySeries All(int num_fractions);
};

// floor(d * sum(weights) / (D + 1)).
int64_t CapacityAt(std::span<const int64_t> weights, int d,
                   int num_fractions);

// One capacity per listed fraction, ascending in d. Throws ParameterError for
// empty weights or fractions outside [1, D].
std::vector<int64_t> CapacitySeriesValues(std::span<const int64_t> weights,
                                          const CapacitySeries& series);

// n-1 unit items plus one item of weight n/2 + 1 and value n/2 + 2.
// At capacity n/2 there are binom(n-1, n/2) optima; at n/2 + 1 exactly one.
struct CapacityCliff {
  Instance instance;           // capacity n/2
  int64_t alternate_capacity;  // n/2 + 1
};

// Requires an even n >= 4.
CapacityCliff PathologicalInstance(int n);

// n/R copies of every weight 1..R with value equal to weight, grouped by
// weight, and capacity floor(sum / 2). Requires n divisible by 2R.
Instance StructuredSubsetSum(int n, int64_t upper);

}  // namespace kpcount

#endif  // KPCOUNT_GENERATORS_H_
