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

#ifndef KPCOUNT_SAMPLER_H_
#define KPCOUNT_SAMPLER_H_

#include <cstdint>
#include <vector>

#include "kpcount/core.h"
#include "kpcount/dp_count.h"
#include "kpcount/rng.h"

namespace kpcount {

struct SampleRequest {
  int64_t k = 1;
  uint64_t seed = 0;
};

// How the backtracking walk treats item i at remaining capacity w.
struct Step {
  enum class Kind { kForcedTake, kForcedLeave, kRandom };
  Kind kind = Kind::kForcedLeave;
  // For kRandom: take item i with probability take_count / total_count,
  // i.e. C(i-1, w-w_i) / C(i, w). Unset otherwise.
  Count take_count;
  Count total_count;
};

// Classifies position (i, w), 1 <= i <= n, 1 <= w <= W, of full tables.
Step ClassifyStep(const DpTables& tables, const Instance& instance, int i,
                  int64_t w);

// One uniformly random optimum. Walks from (n, W) until i or w reaches 0;
// each randomized branch draws an exact integer r in [0, C(i, w)) and takes
// item i iff r < C(i-1, w-w_i).
//
// Throws TableMismatchError when the tables were built from a different
// instance and InsufficientTablesError for two-row tables.
Solution ReconstructOne(const DpTables& tables, const Instance& instance,
                        RandomEngine& engine);

// k independent draws; draw j uses Substream(seed, j), so the result does not
// depend on how draws are scheduled.
std::vector<Solution> SampleOptima(const DpTables& tables,
                                   const Instance& instance,
                                   const SampleRequest& request);

}  // namespace kpcount

#endif  // KPCOUNT_SAMPLER_H_
