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

// Experiment runner: replications of (algorithm, instance), aggregation across
// replications and result files.
//
// Replication r (1-based) uses the environment stream
// ChildSeed(seed, r, Stream::kEnvironment) and the policy stream
// ChildSeed(seed, r, Stream::kPolicy). Replications are independent and may
// run on several threads; results are keyed by run index, so the output does
// not depend on scheduling.

#ifndef CMAB_HARNESS_H_
#define CMAB_HARNESS_H_

#include <span>
#include <string>
#include <vector>

#include "cmab/config.h"
#include "cmab/environment.h"
#include "cmab/problem.h"

namespace cmab {

struct AggregateResult {
  ExperimentConfig config;
  // Mean and population standard deviation of the cumulative regret across
  // replications, one entry per round.
  std::vector<double> per_round_mean_regret;
  std::vector<double> per_round_std;
  double final_regret_mean = 0.0;
  double final_regret_std = 0.0;
  std::vector<double> final_regret_per_run;
  // Policy select + update time.
  double runtime_mean_seconds = 0.0;
  double per_round_runtime_seconds = 0.0;
  std::vector<double> runtime_per_run_seconds;
};

// One replication: t = 1..horizon of select, step, record, update. Only
// Select and Update are timed.
RunRecord RunReplication(const ExperimentConfig& config,
                         const ProblemInstance& instance, int run_index);

// All replications of `config` on `instance`, indexed by run - 1. A failing
// replication aborts the experiment by rethrowing its exception once every
// worker has stopped.
std::vector<RunRecord> RunReplications(const ExperimentConfig& config,
                                       const ProblemInstance& instance);

AggregateResult Aggregate(const ExperimentConfig& config,
                          std::span<const RunRecord> records);

// Validates the config, builds the instance and runs every replication.
AggregateResult RunExperiment(const ExperimentConfig& config,
                              std::vector<RunRecord>* records = nullptr);
AggregateResult RunExperiment(const ExperimentConfig& config,
                              const ProblemInstance& instance,
                              std::vector<RunRecord>* records = nullptr);

// round,mean_cum_regret,std with one row per round.
std::string FormatRegretTable(const AggregateResult& result);
// JSON: config echo and final regret statistics. Deterministic.
std::string FormatSummary(const AggregateResult& result);
// JSON: wall-clock measurements. Varies between executions.
std::string FormatRuntime(const AggregateResult& result);

struct OutputFiles {
  std::string table;    // <prefix>.csv
  std::string summary;  // <prefix>.summary.json
  std::string runtime;  // <prefix>.runtime.json
};

// Writes the three files next to `prefix`, creating parent directories.
// Throws std::runtime_error with the OS message on I/O failure.
OutputFiles EmitResults(const AggregateResult& result,
                        const std::string& prefix);

// algorithm,final_regret_mean,final_regret_std,runtime_mean_seconds,
// per_round_runtime_seconds
std::string FormatComparisonTable(std::span<const AggregateResult> results);

// Runs every algorithm on the instance of `base` with the same seed.
std::vector<AggregateResult> RunComparison(
    const ExperimentConfig& base, std::span<const Algorithm> algorithms);

enum class SweepAxis { kK, kM };

struct SweepCell {
  SweepAxis axis;
  int value;
  AggregateResult result;
};

// For every value, sets k or m and runs every algorithm. Varying m redraws the
// means with the same instance_seed.
std::vector<SweepCell> RunSweep(const ExperimentConfig& base, SweepAxis axis,
                                std::span<const int> values,
                                std::span<const Algorithm> algorithms);

// axis,value,algorithm,final_regret_mean,final_regret_std,runtime_mean_seconds
std::string FormatSweepTable(std::span<const SweepCell> cells);

// Writes `text` to `path`, creating parent directories.
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace cmab

#endif  // CMAB_HARNESS_H_
