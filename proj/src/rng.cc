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

#include "kpcount/rng.h"

#include <bit>
#include <vector>

#include "kpcount/errors.h"

namespace kpcount {

uint64_t MixBits(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t DeriveSeed(std::initializer_list<uint64_t> words) {
  uint64_t state = 0x6b70636f756e7400ULL;
  for (uint64_t word : words) state = MixBits(state ^ MixBits(word));
  return state;
}

RandomEngine Substream(uint64_t seed, uint64_t index) {
  return RandomEngine(DeriveSeed({seed, index}));
}

uint64_t UniformBelow(RandomEngine& engine, uint64_t bound) {
  if (bound == 0) throw ParameterError("UniformBelow: bound must be positive");
  if ((bound & (bound - 1)) == 0) return engine() & (bound - 1);
  const uint64_t mask = ~uint64_t{0} >> std::countl_zero(bound);
  while (true) {
    const uint64_t r = engine() & mask;
    if (r < bound) return r;
  }
}

int64_t UniformInt(RandomEngine& engine, int64_t lo, int64_t hi) {
  if (lo > hi) throw ParameterError("UniformInt: empty interval");
  const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
  const uint64_t offset =
      span == ~uint64_t{0} ? engine() : UniformBelow(engine, span + 1);
  return static_cast<int64_t>(static_cast<uint64_t>(lo) + offset);
}

Count UniformBelow(RandomEngine& engine, const Count& bound) {
  if (sgn(bound) <= 0) {
    throw ParameterError("UniformBelow: bound must be positive");
  }
  if (bound.fits_ulong_p() && sizeof(unsigned long) == sizeof(uint64_t)) {
    return Count(static_cast<unsigned long>(
        UniformBelow(engine, static_cast<uint64_t>(bound.get_ui()))));
  }
  const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  const uint64_t top_mask =
      top_bits == 64 ? ~uint64_t{0} : (uint64_t{1} << top_bits) - 1;
  std::vector<uint64_t> limbs(words);
  Count r;
  while (true) {
    // limbs[0] is the least significant word.
    for (uint64_t& limb : limbs) limb = engine();
    limbs.back() &= top_mask;
    mpz_import(r.get_mpz_t(), words, -1, sizeof(uint64_t), 0, 0,
               limbs.data());
    if (r < bound) return r;
  }
}

}  // namespace kpcount
