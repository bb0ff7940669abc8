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

#ifndef KPCOUNT_RNG_H_
#define KPCOUNT_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

#include "kpcount/core.h"

namespace kpcount {

// Random streams are std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Seeds are passed through SplitMix64 so that nearby inputs
// give unrelated streams. All bounded draws below use rejection sampling on
// raw 64-bit outputs, so results are identical on every platform
// (std::uniform_int_distribution is implementation-defined).
using RandomEngine = std::mt19937_64;

// SplitMix64 finalizer (Steele, Lea and Flood).
uint64_t MixBits(uint64_t x);

// Stable hash of a sequence of words; order-sensitive.
uint64_t DeriveSeed(std::initializer_list<uint64_t> words);

// Independent stream number `index` of `seed`.
RandomEngine Substream(uint64_t seed, uint64_t index);

// Uniform in [0, bound). bound must be positive.
uint64_t UniformBelow(RandomEngine& engine, uint64_t bound);

// Uniform in the closed interval [lo, hi]. Requires lo <= hi.
int64_t UniformInt(RandomEngine& engine, int64_t lo, int64_t hi);

// Uniform in [0, bound) for an arbitrary-precision positive bound. Draws
// bit_length(bound) random bits and rejects values >= bound.
Count UniformBelow(RandomEngine& engine, const Count& bound);

}  // namespace kpcount

#endif  // KPCOUNT_RNG_H_
