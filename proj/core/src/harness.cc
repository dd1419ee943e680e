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

#include "cmab/harness.h"

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstring>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cmab/policy.h"
#include "cmab/random.h"
#include "cmab/text.h"
#include "json.hpp"

namespace cmab {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::duration d) {
  return std::chrono::duration<double>(d).count();
}

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

// Population statistics, accumulated in run order.
template <typename Get>
MeanStd Stats(std::size_t n, Get get) {
  MeanStd out;
  for (std::size_t r = 0; r < n; ++r) out.mean += get(r);
  out.mean /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const double d = get(r) - out.mean;
    ss += d * d;
  }
  out.std = std::sqrt(ss / static_cast<double>(n));
  return out;
}

nlohmann::ordered_json ConfigJson(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["algorithm"] = std::string(ToString(c.algorithm));
  j["m"] = c.m;
  j["k"] = c.k;
  j["horizon"] = c.horizon;
  j["delta"] = c.delta;
  j["gamma"] = c.gamma;
  j["feedback"] = std::string(ToString(c.feedback));
  j["order"] = std::string(ToString(c.order));
  j["no_click"] = std::string(ToString(c.no_click));
  j["means"] = ToString(c.means);
  j["instance_seed"] = c.instance_seed;
  j["seed"] = c.seed;
  j["runs"] = c.runs;
  j["threads"] = c.threads;
  j["out"] = c.out;
  return j;
}

}  // namespace

RunRecord RunReplication(const ExperimentConfig& config,
                         const ProblemInstance& instance, int run_index) {
  PolicyParams params;
  params.num_arms = instance.num_arms();
  params.k = instance.k();
  params.feedback_mode = instance.feedback_mode();
  params.delta = config.delta;
  params.exp3m_gamma = config.gamma;
  params.seed = ChildSeed(config.seed, run_index, Stream::kPolicy);
  auto policy = MakePolicy(config.algorithm, params);
  Environment env(instance,
                  ChildSeed(config.seed, run_index, Stream::kEnvironment));

  RunRecord record;
  record.per_round_gap.reserve(config.horizon);
  record.cumulative_regret.reserve(config.horizon);
  for (std::int64_t t = 1; t <= config.horizon; ++t) {
    const auto select_start = Clock::now();
    Action action = policy->Select(t);
    const auto select_end = Clock::now();
    const Feedback feedback = env.Step(action);
    const auto update_start = Clock::now();
    policy->Update(action, feedback);
    const auto update_end = Clock::now();
    RecordRound(record, action, instance,
                Seconds((select_end - select_start) + (update_end - update_start)));
  }
  return record;
}

std::vector<RunRecord> RunReplications(const ExperimentConfig& config,
                                       const ProblemInstance& instance) {
  std::vector<RunRecord> records(config.runs);
  int workers = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, config.runs);

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    while (!failed.load()) {
      const int r = next.fetch_add(1);
      if (r >= config.runs) return;
      try {
        records[r] = RunReplication(config, instance, r + 1);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return records;
}

AggregateResult Aggregate(const ExperimentConfig& config,
                          std::span<const RunRecord> records) {
  if (records.empty()) throw std::invalid_argument("no replications to aggregate");
  const std::size_t rounds = records.front().cumulative_regret.size();
  for (const auto& r : records) {
    if (r.cumulative_regret.size() != rounds) {
      throw std::invalid_argument("replications differ in length");
    }
  }
  const std::size_t n = records.size();
  AggregateResult result;
  result.config = config;
  result.per_round_mean_regret.resize(rounds);
  result.per_round_std.resize(rounds);
  for (std::size_t t = 0; t < rounds; ++t) {
    const auto s =
        Stats(n, [&](std::size_t r) { return records[r].cumulative_regret[t]; });
    result.per_round_mean_regret[t] = s.mean;
    result.per_round_std[t] = s.std;
  }
  const auto final_stats =
      Stats(n, [&](std::size_t r) { return records[r].final_regret(); });
  result.final_regret_mean = final_stats.mean;
  result.final_regret_std = final_stats.std;
  const auto time_stats =
      Stats(n, [&](std::size_t r) { return records[r].wall_time_total; });
  result.runtime_mean_seconds = time_stats.mean;
  result.per_round_runtime_seconds =
      rounds == 0 ? 0.0 : time_stats.mean / static_cast<double>(rounds);
  for (const auto& r : records) {
    result.final_regret_per_run.push_back(r.final_regret());
    result.runtime_per_run_seconds.push_back(r.wall_time_total);
  }
  return result;
}

AggregateResult RunExperiment(const ExperimentConfig& config,
                              std::vector<RunRecord>* records) {
  config.Validate();
  return RunExperiment(config, BuildInstance(config), records);
}

AggregateResult RunExperiment(const ExperimentConfig& config,
                              const ProblemInstance& instance,
                              std::vector<RunRecord>* records) {
  config.Validate();
  auto runs = RunReplications(config, instance);
  AggregateResult result = Aggregate(config, runs);
  if (records != nullptr) *records = std::move(runs);
  return result;
}

std::string FormatRegretTable(const AggregateResult& result) {
  std::string out = "round,mean_cum_regret,std\n";
  out.reserve(out.size() + result.per_round_mean_regret.size() * 40);
  for (std::size_t t = 0; t < result.per_round_mean_regret.size(); ++t) {
    out += std::to_string(t + 1);
    out += ',';
    out += FormatDouble(result.per_round_mean_regret[t]);
    out += ',';
    out += FormatDouble(result.per_round_std[t]);
    out += '\n';
  }
  return out;
}

std::string FormatSummary(const AggregateResult& result) {
  nlohmann::ordered_json j;
  j["config"] = ConfigJson(result.config);
  j["rounds"] = result.per_round_mean_regret.size();
  j["runs"] = result.final_regret_per_run.size();
  j["final_regret_mean"] = result.final_regret_mean;
  j["final_regret_std"] = result.final_regret_std;
  j["final_regret_per_run"] = result.final_regret_per_run;
  return j.dump(2) + "\n";
}

std::string FormatRuntime(const AggregateResult& result) {
  nlohmann::ordered_json j;
  j["algorithm"] = std::string(ToString(result.config.algorithm));
  j["runtime_mean_seconds"] = result.runtime_mean_seconds;
  j["per_round_runtime_seconds"] = result.per_round_runtime_seconds;
  j["runtime_per_run_seconds"] = result.runtime_per_run_seconds;
  return j.dump(2) + "\n";
}

void WriteTextFile(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(target.parent_path(), ec);
    if (ec) {
      throw std::runtime_error("cannot create directory '" +
                               target.parent_path().string() +
                               "': " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path +
                             "' for writing: " + std::strerror(errno));
  }
  out << text;
  out.flush();
  if (!out) {
    throw std::runtime_error("write to '" + path +
                             "' failed: " + std::strerror(errno));
  }
}

OutputFiles EmitResults(const AggregateResult& result,
                        const std::string& prefix) {
  OutputFiles files{prefix + ".csv", prefix + ".summary.json",
                    prefix + ".runtime.json"};
  WriteTextFile(files.table, FormatRegretTable(result));
  WriteTextFile(files.summary, FormatSummary(result));
  WriteTextFile(files.runtime, FormatRuntime(result));
  return files;
}

std::string FormatComparisonTable(std::span<const AggregateResult> results) {
  std::string out =
      "algorithm,final_regret_mean,final_regret_std,runtime_mean_seconds,"
      "per_round_runtime_seconds\n";
  for (const auto& r : results) {
    out += std::string(ToString(r.config.algorithm)) + ',' +
           FormatDouble(r.final_regret_mean) + ',' +
           FormatDouble(r.final_regret_std) + ',' +
           FormatDouble(r.runtime_mean_seconds) + ',' +
           FormatDouble(r.per_round_runtime_seconds) + '\n';
  }
  return out;
}

std::vector<AggregateResult> RunComparison(
    const ExperimentConfig& base, std::span<const Algorithm> algorithms) {
  const ProblemInstance instance = BuildInstance(base);
  std::vector<AggregateResult> results;
  for (Algorithm algorithm : algorithms) {
    ExperimentConfig config = base;
    config.algorithm = algorithm;
    results.push_back(RunExperiment(config, instance));
  }
  return results;
}

std::vector<SweepCell> RunSweep(const ExperimentConfig& base, SweepAxis axis,
                                std::span<const int> values,
                                std::span<const Algorithm> algorithms) {
  std::vector<SweepCell> cells;
  for (int value : values) {
    ExperimentConfig config = base;
    (axis == SweepAxis::kK ? config.k : config.m) = value;
    config.Validate();
    for (auto& result : RunComparison(config, algorithms)) {
      cells.push_back({axis, value, std::move(result)});
    }
  }
  return cells;
}

std::string FormatSweepTable(std::span<const SweepCell> cells) {
  std::string out =
      "axis,value,algorithm,final_regret_mean,final_regret_std,"
      "runtime_mean_seconds\n";
  for (const auto& cell : cells) {
    out += std::string(cell.axis == SweepAxis::kK ? "k" : "m") + ',' +
           std::to_string(cell.value) + ',' +
           std::string(ToString(cell.result.config.algorithm)) + ',' +
           FormatDouble(cell.result.final_regret_mean) + ',' +
           FormatDouble(cell.result.final_regret_std) + ',' +
           FormatDouble(cell.result.runtime_mean_seconds) + '\n';
  }
  return out;
}

}  // namespace cmab
