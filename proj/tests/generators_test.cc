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

#include <numeric>

#include "gtest/gtest.h"
#include "kpcount/dp_count.h"
#include "kpcount/errors.h"

namespace kpcount {
namespace {

int64_t Sum(const std::vector<int64_t>& xs) {
  return std::accumulate(xs.begin(), xs.end(), int64_t{0});
}

TEST(GroupTest, NamesRoundTrip) {
  for (Group g : kAllGroups) EXPECT_EQ(ParseGroup(GroupName(g)), g);
  EXPECT_THROW(ParseGroup("spanner"), ParameterError);
}

TEST(OffsetTest, FloorWithMinimumOne) {
  EXPECT_EQ(LargeOffset(250), 25);
  EXPECT_EQ(LargeOffset(25), 2);
  EXPECT_EQ(LargeOffset(5), 1);
  EXPECT_EQ(SmallOffset(500), 1);
  EXPECT_EQ(SmallOffset(25), 1);
  EXPECT_EQ(SmallOffset(1250), 2);
}

TEST(GenerateTest, StronglyCorrelatedOffset) {
  for (const Item& item : Generate({Group::kScorr, 100, 1, 250, 3})) {
    EXPECT_EQ(item.value, item.weight + 25);
  }
}

TEST(GenerateTest, SubsetSumValueEqualsWeight) {
  for (const Item& item : Generate({Group::kSusu, 100, 1, 73, 4})) {
    EXPECT_EQ(item.value, item.weight);
  }
}

TEST(GenerateTest, Deterministic) {
  for (Group g : kAllGroups) {
    EXPECT_EQ(Generate({g, 50, 1, 100, 77}), Generate({g, 50, 1, 100, 77}));
  }
  EXPECT_NE(Generate({Group::kUncorr, 50, 1, 100, 77}),
            Generate({Group::kUncorr, 50, 1, 100, 78}));
}

TEST(GenerateTest, FrozenStream) {
  // Guards the documented stream definition against accidental changes.
  const std::vector<Item> items = Generate({Group::kUncorr, 4, 1, 100, 2026});
  const std::vector<Item> expected = {{73, 97}, {41, 2}, {31, 10}, {68, 1}};
  EXPECT_EQ(items, expected);
}

TEST(GenerateTest, InvalidSpecs) {
  EXPECT_THROW(Generate({Group::kUncorr, 0, 1, 10, 0}), ParameterError);
  EXPECT_THROW(Generate({Group::kUncorr, 5, 10, 10, 0}), ParameterError);
  EXPECT_THROW(Generate({Group::kUncorr, 5, 0, 10, 0}), ParameterError);
}

TEST(GenerateProperty, GroupInvariants) {
  uint64_t seed = 1;
  for (int64_t upper : {2, 10, 25, 50, 100, 500, 1200}) {
    for (int64_t lower : {int64_t{1}, upper / 2 == 0 ? 1 : upper / 2}) {
      if (lower >= upper) continue;
      const int64_t d1 = LargeOffset(upper);
      const int64_t d2 = SmallOffset(upper);
      for (Group g : kAllGroups) {
        for (const Item& it : Generate({g, 200, lower, upper, seed++})) {
          ASSERT_GE(it.value, 1);
          if (g == Group::kInvscorr) {
            ASSERT_GE(it.weight, lower + d1);
            ASSERT_LE(it.weight, upper + d1);
          } else {
            ASSERT_GE(it.weight, lower);
            ASSERT_LE(it.weight, upper);
          }
          switch (g) {
            case Group::kUncorr:
              ASSERT_GE(it.value, lower);
              ASSERT_LE(it.value, upper);
              break;
            case Group::kWcorr:
              ASSERT_LE(std::abs(it.value - it.weight), d1);
              break;
            case Group::kAscorr:
              ASSERT_LE(std::abs(it.value - it.weight - d1), d2);
              break;
            case Group::kScorr:
              ASSERT_EQ(it.value - it.weight, d1);
              break;
            case Group::kSusu:
              ASSERT_EQ(it.value, it.weight);
              break;
            case Group::kInvscorr:
              ASSERT_EQ(it.weight - it.value, d1);
              break;
          }
        }
      }
    }
  }
}

TEST(CapacitySeriesTest, Examples) {
  const std::vector<int64_t> weights(12, 10);  // sum 120
  EXPECT_EQ(CapacityAt(weights, 1, 11), 10);
  EXPECT_EQ(CapacityAt(weights, 6, 11), 60);
  const std::vector<int64_t> light = {4, 6};  // sum 10
  EXPECT_EQ(CapacityAt(light, 1, 11), 0);
  EXPECT_EQ(CountOptima(Instance({{4, 4}, {6, 6}}, CapacityAt(light, 1, 11))),
            (CountResult{0, Count(1)}));
}

TEST(CapacitySeriesTest, AscendingAndBounded) {
  for (Group g : kAllGroups) {
    const Instance inst(Generate({g, 40, 1, 60, 9}), 0);
    const std::vector<int64_t> w = inst.weights();
    CapacitySeries series;
    series.fractions = {11, 3, 1, 7};
    const std::vector<int64_t> caps = CapacitySeriesValues(w, series);
    ASSERT_EQ(caps.size(), 4u);
    EXPECT_EQ(caps[0], CapacityAt(w, 1, 11));
    EXPECT_EQ(caps[3], CapacityAt(w, 11, 11));
    EXPECT_TRUE(std::is_sorted(caps.begin(), caps.end()));
    EXPECT_LE(caps.back(), Sum(w));
  }
}

TEST(CapacitySeriesTest, Errors) {
  const std::vector<int64_t> w = {1, 2};
  EXPECT_THROW(CapacityAt(w, 0, 11), ParameterError);
  EXPECT_THROW(CapacityAt(w, 12, 11), ParameterError);
  EXPECT_THROW(CapacitySeriesValues({}, CapacitySeries{}), ParameterError);
  CapacitySeries bad;
  bad.fractions = {5, 13};
  EXPECT_THROW(CapacitySeriesValues(w, bad), ParameterError);
}

TEST(PathologicalTest, SixItems) {
  const CapacityCliff cliff = PathologicalInstance(6);
  EXPECT_EQ(cliff.instance.weights(), (std::vector<int64_t>{1, 1, 1, 1, 1, 4}));
  EXPECT_EQ(cliff.instance.values(), (std::vector<int64_t>{1, 1, 1, 1, 1, 5}));
  EXPECT_EQ(cliff.instance.capacity(), 3);
  EXPECT_EQ(cliff.alternate_capacity, 4);
  EXPECT_EQ(BruteForceOptima(cliff.instance).count, 10);
  EXPECT_EQ(
      BruteForceOptima(cliff.instance.WithCapacity(cliff.alternate_capacity))
          .count,
      1);
}

TEST(PathologicalTest, CliffCounts) {
  const CapacityCliff twelve = PathologicalInstance(12);
  EXPECT_EQ(BruteForceOptima(twelve.instance).count, 462);
  EXPECT_EQ(CountOptima(twelve.instance).num_optima, 462);

  Count binom;
  mpz_bin_uiui(binom.get_mpz_t(), 19, 10);
  ASSERT_EQ(binom, 92378);
  const CapacityCliff twenty = PathologicalInstance(20);
  EXPECT_EQ(CountOptima(twenty.instance), (CountResult{10, binom}));
  EXPECT_EQ(CountOptima(twenty.instance.WithCapacity(11)),
            (CountResult{12, Count(1)}));
}

TEST(PathologicalTest, UniqueOptimumValueAtAlternateCapacity) {
  for (int n = 4; n <= 60; n += 2) {
    const CapacityCliff cliff = PathologicalInstance(n);
    const CountResult r =
        CountOptima(cliff.instance.WithCapacity(cliff.alternate_capacity));
    EXPECT_EQ(r.v_max, n / 2 + 2);
    EXPECT_EQ(r.num_optima, 1);
    Count binom;
    mpz_bin_uiui(binom.get_mpz_t(), n - 1, n / 2);
    EXPECT_EQ(CountOptima(cliff.instance).num_optima, binom);
  }
}

TEST(PathologicalTest, Errors) {
  EXPECT_THROW(PathologicalInstance(7), ParameterError);
  EXPECT_THROW(PathologicalInstance(2), ParameterError);
}

TEST(StructuredSubsetSumTest, FourItems) {
  const Instance inst = StructuredSubsetSum(4, 2);
  EXPECT_EQ(inst.weights(), (std::vector<int64_t>{1, 1, 2, 2}));
  EXPECT_EQ(inst.values(), inst.weights());
  EXPECT_EQ(inst.capacity(), 3);
  EXPECT_EQ(CountOptima(inst).num_optima, 4);
  EXPECT_EQ(BruteForceOptima(inst).count, 4);
}

TEST(StructuredSubsetSumTest, TwentyItems) {
  const Instance inst = StructuredSubsetSum(20, 10);
  EXPECT_EQ(inst.capacity(), 55);
  // Coefficient of x^55 in prod (1 + x^w)^2, w = 1..10.
  EXPECT_EQ(CountOptima(inst).num_optima, 29504);
  EXPECT_GE(CountOptima(inst).num_optima, 1024);
}

TEST(StructuredSubsetSumTest, OptimaFillTheKnapsackExactly) {
  for (auto [n, upper] : {std::pair{4, 2}, {12, 3}, {16, 4}, {12, 6}}) {
    const Instance inst = StructuredSubsetSum(n, upper);
    if (Sum(inst.weights()) % 2 != 0) continue;
    const OracleResult oracle = BruteForceOptima(inst);
    EXPECT_EQ(oracle.v_max, inst.capacity());
    for (const Solution& s : oracle.optima) {
      EXPECT_EQ(TotalWeight(s, inst), inst.capacity());
      EXPECT_EQ(TotalValue(s, inst), inst.capacity());
    }
  }
}

TEST(StructuredSubsetSumTest, Errors) {
  EXPECT_THROW(StructuredSubsetSum(10, 10), ParameterError);
  EXPECT_THROW(StructuredSubsetSum(6, 4), ParameterError);
}

}  // namespace
}  // namespace kpcount
