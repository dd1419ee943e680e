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

#ifndef CMAB_ENVIRONMENT_H_
#define CMAB_ENVIRONMENT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cmab/problem.h"
#include "cmab/random.h"

namespace cmab {

// Stochastic Bernoulli environment.
//
// Every round draws the outcome X_i ~ Bernoulli(mean_i) of all m arms from the
// environment's own stream and then reveals only the triggered set. The noise
// sequence therefore depends on (instance, seed) alone and never on which
// actions a policy plays, so policies compared under one seed face identical
// realizations.
class Environment {
 public:
  Environment(ProblemInstance instance, std::uint64_t seed);

  // Dispatches on the instance's feedback mode.
  Feedback Step(const Action& action);

  // Reveals the outcome of every played arm, in action order.
  Feedback StepSemiBandit(const Action& action);

  // Examines the played arms in the instance's examination order and stops at
  // the first 1 (disjunctive) or the first 0 (conjunctive). A disjunctive
  // round where nothing attracts reveals nothing, or all zeros under
  // NoClickRule::kObserveZeros. Throws ModeError on a semi-bandit instance.
  Feedback StepCascading(const Action& action);

  // Index of the next round; starts at 1.
  std::int64_t round() const { return round_; }
  const ProblemInstance& instance() const { return instance_; }
  // Outcomes of all m arms in the most recent round.
  std::span<const std::uint8_t> last_outcomes() const { return outcomes_; }

 private:
  void DrawOutcomes();

  ProblemInstance instance_;
  Rng rng_;
  std::int64_t round_ = 1;
  std::vector<std::uint8_t> outcomes_;
};

// The played arms in the order a cascading user examines them. Ties in the
// true mean keep the policy's relative order.
std::vector<int> ExaminationSequence(const Action& action,
                                     const ProblemInstance& instance);

// Cascade stopping rule applied to a precomputed outcome table indexed by arm.
Feedback RevealCascade(std::span<const int> sequence,
                       std::span<const std::uint8_t> outcome_by_arm,
                       FeedbackMode mode,
                       NoClickRule no_click = NoClickRule::kNoOp);

// Regret trajectory and policy timing of one replication.
struct RunRecord {
  std::vector<double> per_round_gap;
  std::vector<double> cumulative_regret;
  double wall_time_total = 0.0;  // seconds spent in policy select + update

  std::int64_t rounds() const {
    return static_cast<std::int64_t>(per_round_gap.size());
  }
  double wall_time_per_round() const {
    return per_round_gap.empty() ? 0.0 : wall_time_total / rounds();
  }
  double final_regret() const {
    return cumulative_regret.empty() ? 0.0 : cumulative_regret.back();
  }
};

void RecordRound(RunRecord& record, double gap, double elapsed_seconds);

// Regret comes from the true means only, never from realized outcomes.
void RecordRound(RunRecord& record, const Action& action,
                 const ProblemInstance& instance, double elapsed_seconds);

}  // namespace cmab

#endif  // CMAB_ENVIRONMENT_H_
