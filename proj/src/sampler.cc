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

#include "kpcount/sampler.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kpcount/errors.h"

namespace kpcount {

namespace {

void RequireSamplingTables(const DpTables& tables, const Instance& instance) {
  if (tables.fingerprint() != InstanceFingerprint(instance) ||
      tables.num_items() != instance.num_items() ||
      tables.capacity() != instance.capacity()) {
    throw TableMismatchError("tables were built from a different instance");
  }
  if (tables.mode() != TableMode::kFullTable) {
    throw InsufficientTablesError(
        "sampling needs full tables, got two-row tables");
  }
}

Step ClassifyUnchecked(const DpTables& tables, const Instance& instance,
                       int i, int64_t w) {
  const Item& item = instance.item(i);
  const int64_t here = tables.value(i, w);
  const int64_t leave = tables.value(i - 1, w);
  Step step;
  if (item.weight <= w && here == leave &&
      here == tables.value(i - 1, w - item.weight) + item.value) {
    step.kind = Step::Kind::kRandom;
    step.take_count = tables.count(i - 1, w - item.weight);
    step.total_count = tables.count(i, w);
  } else if (here > leave) {
    step.kind = Step::Kind::kForcedTake;
  } else {
    step.kind = Step::Kind::kForcedLeave;
  }
  return step;
}

Solution Walk(const DpTables& tables, const Instance& instance,
              RandomEngine& engine) {
  std::vector<int> taken;
  int i = instance.num_items();
  int64_t w = instance.capacity();
  while (i > 0 && w > 0) {
    const Step step = ClassifyUnchecked(tables, instance, i, w);
    bool take = step.kind == Step::Kind::kForcedTake;
    if (step.kind == Step::Kind::kRandom) {
      take = UniformBelow(engine, step.total_count) < step.take_count;
    }
    if (take) {
      taken.push_back(i);
      w -= instance.item(i).weight;
    }
    --i;
  }
  std::reverse(taken.begin(), taken.end());
  return Solution(std::move(taken));
}

}  // namespace

Step ClassifyStep(const DpTables& tables, const Instance& instance, int i,
                  int64_t w) {
  RequireSamplingTables(tables, instance);
  if (i < 1 || i > instance.num_items() || w < 1 ||
      w > instance.capacity()) {
    throw std::out_of_range("step (" + std::to_string(i) + ", " +
                            std::to_string(w) + ") outside the table");
  }
  return ClassifyUnchecked(tables, instance, i, w);
}

Solution ReconstructOne(const DpTables& tables, const Instance& instance,
                        RandomEngine& engine) {
  RequireSamplingTables(tables, instance);
  return Walk(tables, instance, engine);
}

std::vector<Solution> SampleOptima(const DpTables& tables,
                                   const Instance& instance,
                                   const SampleRequest& request) {
  if (request.k < 1) throw ParameterError("sample count k must be ≥ 1");
  RequireSamplingTables(tables, instance);
  std::vector<Solution> samples;
  samples.reserve(static_cast<size_t>(request.k));
  for (int64_t draw = 0; draw < request.k; ++draw) {
    RandomEngine engine = Substream(request.seed, static_cast<uint64_t>(draw));
    samples.push_back(Walk(tables, instance, engine));
  }
  return samples;
}

}  // namespace kpcount
