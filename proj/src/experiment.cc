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

#include "kpcount/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <map>
#include <mutex>
#include <new>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "kpcount/errors.h"
#include "kpcount/rng.h"

namespace kpcount {

namespace {

struct Cell {
  Group group;
  int n;
  int64_t upper;
  int replicate;
};

std::string CellName(const Cell& cell) {
  return std::string(GroupName(cell.group)) + " n=" + std::to_string(cell.n) +
         " R=" + std::to_string(cell.upper) +
         " replicate=" + std::to_string(cell.replicate);
}

std::vector<ResultRow> RunCell(const ExperimentConfig& config,
                               const Cell& cell) {
  GeneratorSpec spec;
  spec.group = cell.group;
  spec.n = cell.n;
  spec.lower = config.lower;
  spec.upper = cell.upper;
  spec.seed =
      CellSeed(config.base_seed, cell.group, cell.n, cell.upper, cell.replicate);
  const Instance base(Generate(spec), 0);
  const std::vector<int64_t> weights = base.weights();

  std::vector<int> fractions = config.fractions;
  std::sort(fractions.begin(), fractions.end());
  std::vector<ResultRow> rows;
  for (int d : fractions) {
    const Instance instance =
        base.WithCapacity(CapacityAt(weights, d, config.num_fractions));
    const auto start = std::chrono::steady_clock::now();
    CountResult result = CountOptima(instance, config.count_mode);
    const auto stop = std::chrono::steady_clock::now();

    ResultRow row;
    row.group = cell.group;
    row.n = cell.n;
    row.upper = cell.upper;
    row.d = d;
    row.capacity_pct = CapacityPercent(d, config.num_fractions);
    row.replicate = cell.replicate;
    row.seed = spec.seed;
    row.v_max = result.v_max;
    row.log2_count = Log2Count(result.num_optima);
    row.num_optima = std::move(result.num_optima);
    row.h_ratio =
        static_cast<double>(cell.n) / static_cast<double>(cell.upper);
    if (config.record_runtime) {
      row.runtime_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
T Get(const nlohmann::json& value, const char* key) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("config key '") + key +
                     "' has the wrong type");
  }
}

}  // namespace

void ValidateConfig(const ExperimentConfig& config) {
  if (config.groups.empty()) throw ParameterError("groups must be nonempty");
  if (config.n_values.empty()) {
    throw ParameterError("n_values must be nonempty");
  }
  if (config.upper_values.empty()) {
    throw ParameterError("R_values must be nonempty");
  }
  if (config.fractions.empty()) {
    throw ParameterError("d_values must be nonempty");
  }
  if (config.replicates < 1) throw ParameterError("replicates must be ≥ 1");
  if (config.threads < 1) throw ParameterError("threads must be ≥ 1");
  if (config.num_fractions < 1) throw ParameterError("D must be ≥ 1");
  for (int d : config.fractions) {
    if (d < 1 || d > config.num_fractions) {
      throw ParameterError("d=" + std::to_string(d) + " outside [1, D]");
    }
  }
  for (int n : config.n_values) {
    for (int64_t upper : config.upper_values) {
      ValidateSpec(GeneratorSpec{config.groups.front(), n, config.lower,
                                 upper, 0});
    }
  }
}

ExperimentConfig ParseConfigJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("config must be a JSON object");

  ExperimentConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "groups") {
      config.groups.clear();
      for (const auto& name : Get<std::vector<std::string>>(value, "groups")) {
        try {
          config.groups.push_back(ParseGroup(name));
        } catch (const ParameterError& e) {
          throw ParseError(e.what());
        }
      }
    } else if (key == "n_values") {
      config.n_values = Get<std::vector<int>>(value, "n_values");
    } else if (key == "R_values") {
      config.upper_values = Get<std::vector<int64_t>>(value, "R_values");
    } else if (key == "L") {
      config.lower = Get<int64_t>(value, "L");
    } else if (key == "D") {
      config.num_fractions = Get<int>(value, "D");
      if (!doc.contains("d_values")) {
        config.fractions = CapacitySeries::All(config.num_fractions).fractions;
      }
    } else if (key == "d_values") {
      config.fractions = Get<std::vector<int>>(value, "d_values");
    } else if (key == "replicates") {
      config.replicates = Get<int>(value, "replicates");
    } else if (key == "base_seed") {
      config.base_seed = Get<uint64_t>(value, "base_seed");
    } else if (key == "count_mode") {
      const auto mode = Get<std::string>(value, "count_mode");
      if (mode == "two-row") {
        config.count_mode = TableMode::kTwoRow;
      } else if (mode == "full" || mode == "full-table") {
        config.count_mode = TableMode::kFullTable;
      } else {
        throw ParseError("count_mode must be 'two-row' or 'full'");
      }
    } else if (key == "threads") {
      config.threads = Get<int>(value, "threads");
    } else if (key == "record_runtime") {
      config.record_runtime = Get<bool>(value, "record_runtime");
    } else if (key == "output") {
      config.output = Get<std::string>(value, "output");
    } else {
      throw ParseError("unknown config key '" + key + "'");
    }
  }
  try {
    ValidateConfig(config);
  } catch (const ParameterError& e) {
    throw ParseError(std::string("invalid config: ") + e.what());
  }
  return config;
}

uint64_t CellSeed(uint64_t base_seed, Group group, int n, int64_t upper,
                  int replicate) {
  return DeriveSeed({base_seed, static_cast<uint64_t>(group),
                     static_cast<uint64_t>(n), static_cast<uint64_t>(upper),
                     static_cast<uint64_t>(replicate)});
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  std::vector<Cell> cells;
  for (Group group : config.groups) {
    for (int n : config.n_values) {
      for (int64_t upper : config.upper_values) {
        for (int r = 0; r < config.replicates; ++r) {
          cells.push_back(Cell{group, n, upper, r});
        }
      }
    }
  }

  std::vector<std::vector<ResultRow>> per_cell(cells.size());
  std::vector<std::string> errors(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < cells.size(); i = next++) {
      try {
        per_cell[i] = RunCell(config, cells[i]);
      } catch (const Error& e) {
        errors[i] = CellName(cells[i]) + ": " + e.what();
      } catch (const std::bad_alloc&) {
        errors[i] = CellName(cells[i]) + ": out of memory";
      } catch (const std::length_error& e) {
        errors[i] = CellName(cells[i]) + ": " + e.what();
      }
    }
  };
  const auto num_threads = static_cast<size_t>(
      std::min<size_t>(static_cast<size_t>(config.threads), cells.size()));
  if (num_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (size_t t = 0; t < num_threads; ++t) pool.emplace_back(worker);
  }

  ExperimentResult result;
  for (size_t i = 0; i < cells.size(); ++i) {
    for (ResultRow& row : per_cell[i]) result.rows.push_back(std::move(row));
    if (!errors[i].empty()) result.diagnostics.push_back(errors[i]);
  }
  SortRows(result.rows);
  return result;
}

void SortRows(std::vector<ResultRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& a, const ResultRow& b) {
                     return std::tie(a.group, a.n, a.upper, a.d, a.replicate) <
                            std::tie(b.group, b.n, b.upper, b.d, b.replicate);
                   });
}

double Quantile(std::vector<double> data, double p) {
  if (data.empty()) throw UsageError("quantile of empty data");
  std::sort(data.begin(), data.end());
  const double position = p * static_cast<double>(data.size() - 1);
  const auto lo = static_cast<size_t>(position);
  const size_t hi = std::min(lo + 1, data.size() - 1);
  const double fraction = position - static_cast<double>(lo);
  return data[lo] + fraction * (data[hi] - data[lo]);
}

std::vector<SummaryRow> Summarize(std::span<const ResultRow> rows) {
  if (rows.empty()) throw UsageError("cannot summarize an empty result set");
  using Key = std::tuple<Group, int, int64_t, int>;
  std::map<Key, std::vector<const ResultRow*>> cells;
  for (const ResultRow& row : rows) {
    cells[Key{row.group, row.n, row.upper, row.d}].push_back(&row);
  }

  std::vector<SummaryRow> summary;
  summary.reserve(cells.size());
  for (const auto& [key, members] : cells) {
    std::vector<double> logs;
    logs.reserve(members.size());
    for (const ResultRow* row : members) logs.push_back(row->log2_count);
    SummaryRow s;
    std::tie(s.group, s.n, s.upper, s.d) = key;
    s.capacity_pct = members.front()->capacity_pct;
    s.replicates = static_cast<int>(members.size());
    s.h_ratio = members.front()->h_ratio;
    s.min = *std::min_element(logs.begin(), logs.end());
    s.max = *std::max_element(logs.begin(), logs.end());
    s.q1 = Quantile(logs, 0.25);
    s.median = Quantile(logs, 0.5);
    s.q3 = Quantile(logs, 0.75);
    summary.push_back(s);
  }
  return summary;
}

std::string FormatSummaryCsv(std::span<const SummaryRow> rows) {
  auto fixed = [](double value, int precision) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                   std::chars_format::fixed, precision);
    return ec == std::errc() ? std::string(buffer, ptr) : std::string("nan");
  };
  std::string out(kSummaryHeader);
  out += '\n';
  for (const SummaryRow& s : rows) {
    out += GroupName(s.group);
    out += ',' + std::to_string(s.n) + ',' + std::to_string(s.upper) + ',' +
           std::to_string(s.d) + ',' + std::to_string(s.capacity_pct) + ',' +
           std::to_string(s.replicates);
    out += ',' + fixed(s.h_ratio, 6);
    for (double v : {s.min, s.q1, s.median, s.q3, s.max}) {
      out += ',' + fixed(v, 6);
    }
    out += '\n';
  }
  return out;
}

}  // namespace kpcount
