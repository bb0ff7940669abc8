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

// kpcount: count and sample the optimal solutions of 0-1 knapsack instances.
//
// Exit codes: 0 success, 1 usage or parse error, 2 solve error, 3 io error.

#include <cstdint>
#include <iostream>
#include <new>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kpcount/core.h"
#include "kpcount/dp_count.h"
#include "kpcount/errors.h"
#include "kpcount/experiment.h"
#include "kpcount/generators.h"
#include "kpcount/instance_io.h"
#include "kpcount/sampler.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitSolve = 2;
constexpr int kExitIo = 3;

kpcount::Instance LoadInstance(const std::string& path) {
  if (path == "-") return kpcount::ReadInstance(std::cin);
  return kpcount::ReadInstanceFile(path);
}

void Emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw kpcount::IoError("failed writing to stdout");
  } else {
    kpcount::WriteTextFile(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting and uniform sampling of 0-1 knapsack optima"};
  app.require_subcommand(1);

  struct {
    std::string group;
    int n = 0;
    int64_t lower = 1;
    int64_t upper = 0;
    uint64_t seed = 0;
    std::optional<int> d;
    int num_fractions = 11;
    std::optional<int64_t> capacity;
    std::string out;
  } gen;
  CLI::App* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--group", gen.group, "uncorr|wcorr|ascorr|scorr|susu|invscorr")
      ->required();
  generate->add_option("--n", gen.n, "Number of items")->required();
  generate->add_option("--L", gen.lower, "Weight lower bound")
      ->capture_default_str();
  generate->add_option("--R", gen.upper, "Weight/profit upper bound")
      ->required();
  generate->add_option("--seed", gen.seed, "Generator seed")->required();
  generate->add_option("--d", gen.d, "Capacity fraction index in [1, D]");
  generate->add_option("--D", gen.num_fractions, "Number of capacity fractions")
      ->capture_default_str();
  generate->add_option("--capacity", gen.capacity, "Explicit capacity");
  generate->add_option("--out", gen.out, "Output file, '-' for stdout")
      ->required();

  std::string in_path;
  CLI::App* solve = app.add_subcommand("solve", "Print the optimal value");
  solve->add_option("--in", in_path, "Instance file, '-' for stdin")
      ->required();

  std::string mode = "two-row";
  CLI::App* count = app.add_subcommand("count",
                                       "Print 'v_max num_optima'");
  count->add_option("--in", in_path, "Instance file, '-' for stdin")
      ->required();
  count->add_option("--mode", mode, "full|two-row")
      ->check(CLI::IsMember({"full", "two-row"}))
      ->capture_default_str();

  int64_t k = 1;
  uint64_t sample_seed = 0;
  CLI::App* sample = app.add_subcommand(
      "sample", "Print K uniformly sampled optima, one per line");
  sample->add_option("--in", in_path, "Instance file, '-' for stdin")
      ->required();
  sample->add_option("--k", k, "Number of samples")
      ->required()
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_seed, "Sampling seed")->required();

  std::string config_path;
  std::string results_path;
  std::string summary_path;
  std::optional<int> threads;
  bool timing = false;
  CLI::App* experiment =
      app.add_subcommand("experiment", "Run a counting experiment grid");
  experiment->add_option("--config", config_path, "JSON config file")
      ->required();
  experiment->add_option("--out", results_path,
                         "Results CSV (overrides the config's output)");
  experiment->add_option("--summary", summary_path, "Also write a summary CSV");
  experiment->add_option("--threads", threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  experiment->add_flag("--timing", timing, "Record runtime_ms per row");

  std::string summarize_out = "-";
  CLI::App* summarize = app.add_subcommand(
      "summarize", "Per-cell log2 count quartiles of a results CSV");
  summarize->add_option("--in", in_path, "Results CSV")->required();
  summarize->add_option("--out", summarize_out, "Summary CSV, '-' for stdout")
      ->capture_default_str();

  int max_items = kpcount::kDefaultOracleMaxItems;
  bool list = false;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Brute-force 'v_max num_optima' for small instances");
  oracle->add_option("--in", in_path, "Instance file, '-' for stdin")
      ->required();
  oracle->add_option("--max-n", max_items, "Largest n to enumerate")
      ->capture_default_str();
  oracle->add_flag("--list", list, "Also print every optimum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate) {
      kpcount::GeneratorSpec spec{kpcount::ParseGroup(gen.group), gen.n,
                                  gen.lower, gen.upper, gen.seed};
      std::vector<kpcount::Item> items = kpcount::Generate(spec);
      int64_t capacity = 0;
      if (gen.d && gen.capacity) {
        throw kpcount::UsageError("give either --d or --capacity, not both");
      } else if (gen.d) {
        kpcount::Instance probe(items, 0);
        capacity = kpcount::CapacityAt(probe.weights(), *gen.d,
                                       gen.num_fractions);
      } else if (gen.capacity) {
        capacity = *gen.capacity;
      } else {
        throw kpcount::UsageError("generate needs --d or --capacity");
      }
      kpcount::Instance instance(std::move(items), capacity);
      kpcount::RequireValid(instance);
      Emit(gen.out, kpcount::FormatInstance(instance));
    } else if (*solve) {
      std::cout << kpcount::OptimalValue(LoadInstance(in_path)) << "\n";
    } else if (*count) {
      const auto table_mode = mode == "full" ? kpcount::TableMode::kFullTable
                                             : kpcount::TableMode::kTwoRow;
      const kpcount::CountResult result =
          kpcount::CountOptima(LoadInstance(in_path), table_mode);
      std::cout << result.v_max << " " << result.num_optima.get_str() << "\n";
    } else if (*sample) {
      const kpcount::Instance instance = LoadInstance(in_path);
      const kpcount::DpTables tables = kpcount::BuildTables(instance);
      std::string text;
      for (const kpcount::Solution& s :
           kpcount::SampleOptima(tables, instance, {k, sample_seed})) {
        text += s.ToString();
        text += '\n';
      }
      std::cout << text;
    } else if (*experiment) {
      kpcount::ExperimentConfig config =
          kpcount::ParseConfigJson(kpcount::ReadTextFile(config_path));
      if (!results_path.empty()) config.output = results_path;
      if (config.output.empty()) {
        throw kpcount::UsageError("experiment needs --out or an output key");
      }
      if (threads) config.threads = *threads;
      if (timing) config.record_runtime = true;
      const kpcount::ExperimentResult result = kpcount::RunExperiment(config);
      Emit(config.output, kpcount::FormatResultsCsv(result.rows));
      if (!summary_path.empty() && !result.rows.empty()) {
        Emit(summary_path,
             kpcount::FormatSummaryCsv(kpcount::Summarize(result.rows)));
      }
      for (const std::string& message : result.diagnostics) {
        std::cerr << "cell failed: " << message << "\n";
      }
      if (!result.diagnostics.empty()) return kExitSolve;
    } else if (*summarize) {
      const auto rows =
          kpcount::ParseResultsCsv(kpcount::ReadTextFile(in_path));
      Emit(summarize_out, kpcount::FormatSummaryCsv(kpcount::Summarize(rows)));
    } else if (*oracle) {
      const kpcount::OracleResult result =
          kpcount::BruteForceOptima(LoadInstance(in_path), max_items);
      std::cout << result.v_max << " " << result.count.get_str() << "\n";
      if (list) {
        for (const kpcount::Solution& s : result.optima) {
          std::cout << s.ToString() << "\n";
        }
      }
    }
  } catch (const kpcount::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const kpcount::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const kpcount::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolve;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kExitSolve;
  }
  return 0;
}
