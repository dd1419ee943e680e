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

// Experiment configuration.
//
// Text format: one `key = value` per line, `#` starts a comment, blank lines
// are ignored, every key at most once. Keys and defaults:
//
//   algorithm      cmoss            cmoss | cucb | exp3m | hybrid
//   m              30
//   k              10
//   horizon        100000           rounds T per replication
//   delta          1e-05            CMOSS confidence parameter, in (0, 1)
//   gamma          0.01             EXP3.M mixing coefficient, in (0, 1]
//   feedback       semi_bandit      | cascade_disjunctive | cascade_conjunctive
//   order          descending       | ascending | as_given
//   no_click       noop             | observe_zeros (disjunctive pass, no click)
//   means          uniform(0,0.1)   | affinity(USERS,ITEMS,low|high)
//   instance_seed  2025             seed of the arm means
//   seed           1                base seed of the replications
//   runs           10
//   threads        0                worker threads, 0 = hardware concurrency
//   out            cmab             output path prefix

#ifndef CMAB_CONFIG_H_
#define CMAB_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cmab/data.h"
#include "cmab/policy.h"
#include "cmab/problem.h"

namespace cmab {

struct MeanSource {
  enum class Kind { kUniform, kAffinity };

  Kind kind = Kind::kUniform;
  double lo = 0.0;
  double hi = 0.1;
  std::string users_path;
  std::string items_path;
  Regime regime = Regime::kLow;

  friend bool operator==(const MeanSource&, const MeanSource&) = default;
};

std::string ToString(const MeanSource& source);
MeanSource ParseMeanSource(std::string_view text);

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::kCmoss;
  int m = 30;
  int k = 10;
  std::int64_t horizon = 100000;
  double delta = 1e-5;
  double gamma = 0.01;
  FeedbackMode feedback = FeedbackMode::kSemiBandit;
  ExaminationOrder order = ExaminationOrder::kDescending;
  NoClickRule no_click = NoClickRule::kNoOp;
  MeanSource means;
  std::uint64_t instance_seed = 2025;
  std::uint64_t seed = 1;
  int runs = 10;
  int threads = 0;
  std::string out = "cmab";

  // Throws ConfigError naming the offending key(s).
  void Validate() const;

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

// Keys accepted by ParseConfig / SetConfigValue, in serialization order.
const std::vector<std::string_view>& ConfigKeys();

// Assigns one key. Throws ConfigError on unknown keys or unparsable values.
void SetConfigValue(ExperimentConfig& config, std::string_view key,
                    std::string_view value);

// Defaults overridden by the entries in `text`, then validated.
ExperimentConfig ParseConfig(std::string_view text);
ExperimentConfig LoadConfigFile(const std::string& path);

// Canonical text: every key in ConfigKeys() order. ParseConfig inverts it.
std::string SerializeConfig(const ExperimentConfig& config);

// Builds the experiment's ground truth. Affinity sources read both feature
// files, normalize non-unit rows (one message per file is appended to
// `warnings`), rescale all user-item scores into the regime and sample m of
// them with instance_seed.
ProblemInstance BuildInstance(const ExperimentConfig& config,
                              std::vector<std::string>* warnings = nullptr);

}  // namespace cmab

#endif  // CMAB_CONFIG_H_
