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

#ifndef KPCOUNT_INSTANCE_IO_H_
#define KPCOUNT_INSTANCE_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpcount/core.h"
#include "kpcount/generators.h"

namespace kpcount {

// Instance text format:
//
//   n W
//   w_1 v_1
//   ...
//   w_n v_n
//
// Base-10 integers separated by one space, LF line endings, no trailing blank
// lines. FormatInstance produces exactly these bytes.
std::string FormatInstance(const Instance& instance);
void WriteInstance(const Instance& instance, std::ostream& out);
void WriteInstanceFile(const Instance& instance,
                       const std::filesystem::path& path);

// Accepts the canonical format plus trailing whitespace on any line (CR
// included) and trailing blank lines. Throws ParseError naming the line.
Instance ParseInstance(std::string_view text);
Instance ReadInstance(std::istream& in);
Instance ReadInstanceFile(const std::filesystem::path& path);

// One experiment record.
struct ResultRow {
  Group group = Group::kUncorr;
  int n = 0;
  int64_t upper = 0;  // R
  int d = 0;
  int capacity_pct = 0;  // floor(100 d / (D + 1))
  int replicate = 0;
  uint64_t seed = 0;
  int64_t v_max = 0;
  Count num_optima;
  double log2_count = 0.0;
  double h_ratio = 0.0;  // n / R
  double runtime_ms = 0.0;
};

inline constexpr std::string_view kResultsHeader =
    "group,n,R,d,capacity_pct,replicate,seed,v_max,num_optima,log2_count,"
    "h_ratio,runtime_ms";

// log2 of a positive count, accurate to double precision at any size.
double Log2Count(const Count& count);

int CapacityPercent(int d, int num_fractions);

// Header line followed by one line per row, in the given order. num_optima
// is written as a plain decimal integer.
void WriteResultsCsv(std::span<const ResultRow> rows, std::ostream& out);
std::string FormatResultsCsv(std::span<const ResultRow> rows);

// Inverse of WriteResultsCsv; throws ParseError on schema violations.
std::vector<ResultRow> ParseResultsCsv(std::string_view text);

// Whole-file helpers; throw IoError when the file cannot be accessed.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace kpcount

#endif  // KPCOUNT_INSTANCE_IO_H_
