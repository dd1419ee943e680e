// Copyright 2026 The CMAB Lab Authors. All rights reserved.
//
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

#include "cli.h"

#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cmab/config.h"
#include "cmab/harness.h"
#include "cmab/text.h"

namespace cmab::cli {
namespace {

// Experiment flags shared by every subcommand. Each maps onto the config key
// of the same meaning and, when given, overrides the config file.
struct ExperimentFlags {
  std::optional<std::string> config_path;
  std::map<std::string, std::optional<std::string>> values;

  void Register(CLI::App& app, bool algorithm_list) {
    app.add_option("--config", config_path,
                   "Experiment config file (key = value lines)");
    auto add = [&](const std::string& flag, const std::string& key,
                   const std::string& help) {
      app.add_option(flag, values[key], help);
    };
    add("--algorithm", "algorithm",
        algorithm_list
            ? "Comma-separated algorithms (cmoss,cucb,exp3m,hybrid); default "
              "all that support the feedback mode"
            : "cmoss | cucb | exp3m | hybrid");
    add("--m", "m", "Number of base arms");
    add("--k", "k", "Cardinality budget");
    add("--horizon", "horizon", "Rounds per replication");
    add("--delta", "delta", "CMOSS confidence parameter in (0,1)");
    add("--gamma", "gamma", "EXP3.M mixing coefficient in (0,1]");
    add("--feedback", "feedback",
        "semi_bandit | cascade_disjunctive | cascade_conjunctive");
    add("--order", "order",
        "Cascade examination order: descending | ascending | as_given");
    add("--no-click", "no_click",
        "Disjunctive pass without a click: noop | observe_zeros");
    add("--means", "means",
        "uniform(LO,HI) or affinity(USERS,ITEMS,low|high)");
    add("--instance-seed", "instance_seed", "Seed of the arm means");
    add("--seed", "seed", "Base seed of the replications");
    add("--runs", "runs", "Number of replications");
    add("--threads", "threads", "Worker threads (0 = all cores)");
    add("--out", "out", "Output path prefix");
  }

  // Config file (or defaults) with the command-line values applied on top.
  // A sweep validates per cell, after its own value is applied.
  ExperimentConfig Build(std::vector<Algorithm>* algorithms,
                         bool validate = true) const {
    ExperimentConfig config =
        config_path ? LoadConfigFile(*config_path) : ExperimentConfig{};
    for (const auto& [key, value] : values) {
      if (!value) continue;
      if (key == "algorithm" && algorithms != nullptr) {
        for (auto name : Split(*value, ',')) {
          algorithms->push_back(ParseAlgorithm(name));
        }
        continue;
      }
      SetConfigValue(config, key, *value);
    }
    if (algorithms != nullptr) {
      if (algorithms->empty()) {
        *algorithms = {Algorithm::kCmoss, Algorithm::kCucb};
        if (!IsCascade(config.feedback)) {
          algorithms->push_back(Algorithm::kExp3m);
          algorithms->push_back(Algorithm::kHybrid);
        }
      }
      // Validate with each algorithm's own constraints.
      for (Algorithm a : validate ? *algorithms : std::vector<Algorithm>{}) {
        ExperimentConfig probe = config;
        probe.algorithm = a;
        probe.Validate();
      }
      config.algorithm = algorithms->front();
    }
    if (validate) config.Validate();
    return config;
  }
};

void PrintResult(std::ostream& out, const AggregateResult& r) {
  out << std::left << std::setw(8) << ToString(r.config.algorithm)
      << " final regret " << FormatDouble(r.final_regret_mean) << " +/- "
      << FormatDouble(r.final_regret_std) << "  policy time "
      << FormatDouble(r.runtime_mean_seconds) << " s ("
      << FormatDouble(r.per_round_runtime_seconds) << " s/round)\n";
}

void PrintWarnings(std::ostream& err, const ExperimentConfig& config) {
  if (config.means.kind != MeanSource::Kind::kAffinity) return;
  std::vector<std::string> warnings;
  BuildInstance(config, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

int RunCommand(const ExperimentFlags& flags, std::ostream& out,
               std::ostream& err) {
  const ExperimentConfig config = flags.Build(nullptr);
  PrintWarnings(err, config);
  const AggregateResult result = RunExperiment(config);
  const OutputFiles files = EmitResults(result, config.out);
  PrintResult(out, result);
  out << "wrote " << files.table << ", " << files.summary << ", "
      << files.runtime << '\n';
  return 0;
}

int CompareCommand(const ExperimentFlags& flags, std::ostream& out,
                   std::ostream& err) {
  std::vector<Algorithm> algorithms;
  const ExperimentConfig config = flags.Build(&algorithms);
  PrintWarnings(err, config);
  const auto results = RunComparison(config, algorithms);
  for (const auto& r : results) {
    EmitResults(r, config.out + "." + std::string(ToString(r.config.algorithm)));
    PrintResult(out, r);
  }
  const std::string table = FormatComparisonTable(results);
  WriteTextFile(config.out + ".compare.csv", table);
  out << table << "wrote " << config.out << ".compare.csv\n";
  return 0;
}

int SweepCommand(const ExperimentFlags& flags, const std::string& vary,
                 const std::string& values_text, std::ostream& out,
                 std::ostream& err) {
  std::vector<Algorithm> algorithms;
  const ExperimentConfig config = flags.Build(&algorithms, false);
  const SweepAxis axis = vary == "k" ? SweepAxis::kK : SweepAxis::kM;
  std::vector<int> values;
  for (auto v : Split(values_text, ',')) {
    values.push_back(static_cast<int>(ParseInt(v, "--values")));
  }
  if (!values.empty()) {
    ExperimentConfig first = config;
    (axis == SweepAxis::kK ? first.k : first.m) = values.front();
    first.Validate();
    PrintWarnings(err, first);
  }
  const auto cells = RunSweep(config, axis, values, algorithms);
  for (const auto& cell : cells) {
    out << vary << '=' << cell.value << "  ";
    PrintResult(out, cell.result);
    EmitResults(cell.result, config.out + "." + vary +
                                 std::to_string(cell.value) + "." +
                                 std::string(ToString(cell.result.config.algorithm)));
  }
  const std::string table = FormatSweepTable(cells);
  WriteTextFile(config.out + ".sweep.csv", table);
  out << table << "wrote " << config.out << ".sweep.csv\n";
  return 0;
}

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{
      "cmab_lab: combinatorial multi-armed bandit experiments (CMOSS, CUCB, "
      "EXP3.M, HYBRID)"};
  app.require_subcommand(1);

  ExperimentFlags run_flags;
  auto* run = app.add_subcommand("run", "Run one experiment configuration");
  run_flags.Register(*run, false);

  ExperimentFlags compare_flags;
  auto* compare = app.add_subcommand(
      "compare", "Run several algorithms on one instance with shared seeds");
  compare_flags.Register(*compare, true);

  ExperimentFlags sweep_flags;
  std::string vary;
  std::string values;
  auto* sweep = app.add_subcommand(
      "sweep", "Compare algorithms while varying k or m");
  sweep_flags.Register(*sweep, true);
  sweep->add_option("--vary", vary, "Parameter to vary")
      ->required()
      ->check(CLI::IsMember({"k", "m"}));
  sweep->add_option("--values", values, "Comma-separated values, e.g. 5,10,15")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*run) return RunCommand(run_flags, out, err);
    if (*compare) return CompareCommand(compare_flags, out, err);
    return SweepCommand(sweep_flags, vary, values, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cmab::cli
