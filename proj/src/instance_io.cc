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

#include "kpcount/instance_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <system_error>

#include "kpcount/errors.h"

namespace kpcount {

namespace {

[[noreturn]] void Fail(size_t line, const std::string& message) {
  throw ParseError(message + " (line " + std::to_string(line) + ")");
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsBlank(line[i])) ++i;
    size_t j = i;
    while (j < line.size() && !IsBlank(line[j])) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename T>
bool ParseInteger(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

template <typename T>
T IntegerToken(std::string_view token, size_t line) {
  T value{};
  if (!ParseInteger(token, value)) {
    Fail(line, "non-integer token '" + std::string(token) + "'");
  }
  return value;
}

std::string FormatFixed(double value, int precision) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                 std::chars_format::fixed, precision);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, ptr);
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t end = line.find(',', start);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

double DoubleField(std::string_view token, size_t line) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    Fail(line, "non-numeric field '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string FormatInstance(const Instance& instance) {
  std::string out = std::to_string(instance.num_items()) + " " +
                    std::to_string(instance.capacity()) + "\n";
  for (const Item& item : instance.items()) {
    out += std::to_string(item.weight);
    out += ' ';
    out += std::to_string(item.value);
    out += '\n';
  }
  return out;
}

void WriteInstance(const Instance& instance, std::ostream& out) {
  out << FormatInstance(instance);
  if (!out) throw IoError("failed to write instance");
}

void WriteInstanceFile(const Instance& instance,
                       const std::filesystem::path& path) {
  WriteTextFile(path, FormatInstance(instance));
}

Instance ParseInstance(std::string_view text) {
  std::vector<std::string_view> lines = SplitLines(text);
  while (!lines.empty() && Tokens(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) Fail(1, "missing header 'n W'");

  const std::vector<std::string_view> header = Tokens(lines[0]);
  if (header.size() != 2) Fail(1, "header must be 'n W'");
  const auto n = IntegerToken<int64_t>(header[0], 1);
  const auto capacity = IntegerToken<int64_t>(header[1], 1);
  if (n < 0) Fail(1, "item count must be ≥ 0");
  if (capacity < 0) Fail(1, "capacity must be ≥ 0");
  if (n > std::numeric_limits<int>::max()) Fail(1, "item count too large");

  const auto found = static_cast<int64_t>(lines.size()) - 1;
  if (found != n) {
    throw ParseError("expected " + std::to_string(n) + " items, found " +
                     std::to_string(found));
  }

  std::vector<Item> items;
  items.reserve(static_cast<size_t>(n));
  for (size_t i = 1; i < lines.size(); ++i) {
    const size_t line = i + 1;
    const std::vector<std::string_view> tokens = Tokens(lines[i]);
    if (tokens.size() != 2) Fail(line, "item line must be 'w v'");
    Item item{IntegerToken<int64_t>(tokens[0], line),
              IntegerToken<int64_t>(tokens[1], line)};
    if (item.weight < 1) Fail(line, "weight must be ≥ 1");
    if (item.value < 0) Fail(line, "value must be ≥ 0");
    items.push_back(item);
  }
  return Instance(std::move(items), capacity);
}

Instance ReadInstance(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed to read instance");
  return ParseInstance(text);
}

Instance ReadInstanceFile(const std::filesystem::path& path) {
  return ParseInstance(ReadTextFile(path));
}

double Log2Count(const Count& count) {
  if (sgn(count) <= 0) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, count.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exponent);
}

int CapacityPercent(int d, int num_fractions) {
  return 100 * d / (num_fractions + 1);
}

void WriteResultsCsv(std::span<const ResultRow> rows, std::ostream& out) {
  out << FormatResultsCsv(rows);
  if (!out) throw IoError("failed to write results");
}

std::string FormatResultsCsv(std::span<const ResultRow> rows) {
  std::string out(kResultsHeader);
  out += '\n';
  for (const ResultRow& row : rows) {
    out += GroupName(row.group);
    out += ',' + std::to_string(row.n);
    out += ',' + std::to_string(row.upper);
    out += ',' + std::to_string(row.d);
    out += ',' + std::to_string(row.capacity_pct);
    out += ',' + std::to_string(row.replicate);
    out += ',' + std::to_string(row.seed);
    out += ',' + std::to_string(row.v_max);
    out += ',' + row.num_optima.get_str();
    out += ',' + FormatFixed(row.log2_count, 12);
    out += ',' + FormatFixed(row.h_ratio, 6);
    out += ',' + FormatFixed(row.runtime_ms, 3);
    out += '\n';
  }
  return out;
}

std::vector<ResultRow> ParseResultsCsv(std::string_view text) {
  std::vector<std::string_view> lines = SplitLines(text);
  for (auto& line : lines) {
    while (!line.empty() && IsBlank(line.back())) line.remove_suffix(1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines[0] != kResultsHeader) {
    Fail(1, "missing results header");
  }
  std::vector<ResultRow> rows;
  for (size_t i = 1; i < lines.size(); ++i) {
    const size_t line = i + 1;
    const std::vector<std::string_view> f = SplitFields(lines[i]);
    if (f.size() != 12) Fail(line, "expected 12 fields");
    ResultRow row;
    try {
      row.group = ParseGroup(f[0]);
    } catch (const ParameterError& e) {
      Fail(line, e.what());
    }
    row.n = IntegerToken<int>(f[1], line);
    row.upper = IntegerToken<int64_t>(f[2], line);
    row.d = IntegerToken<int>(f[3], line);
    row.capacity_pct = IntegerToken<int>(f[4], line);
    row.replicate = IntegerToken<int>(f[5], line);
    row.seed = IntegerToken<uint64_t>(f[6], line);
    row.v_max = IntegerToken<int64_t>(f[7], line);
    const std::string digits(f[8]);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos ||
        row.num_optima.set_str(digits, 10) != 0) {
      Fail(line, "num_optima must be a decimal integer");
    }
    row.log2_count = DoubleField(f[9], line);
    row.h_ratio = DoubleField(f[10], line);
    row.runtime_ms = DoubleField(f[11], line);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return text;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace kpcount
