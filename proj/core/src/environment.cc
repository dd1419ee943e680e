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

#include "cmab/environment.h"

#include <algorithm>

#include "cmab/errors.h"

namespace cmab {

Environment::Environment(ProblemInstance instance, std::uint64_t seed)
    : instance_(std::move(instance)),
      rng_(seed),
      outcomes_(instance_.num_arms(), 0) {}

void Environment::DrawOutcomes() {
  const auto means = instance_.means();
  for (std::size_t i = 0; i < means.size(); ++i) {
    outcomes_[i] = Uniform01(rng_) < means[i] ? 1 : 0;
  }
}

Feedback Environment::Step(const Action& action) {
  return IsCascade(instance_.feedback_mode()) ? StepCascading(action)
                                              : StepSemiBandit(action);
}

Feedback Environment::StepSemiBandit(const Action& action) {
  ValidateAction(action, instance_);
  DrawOutcomes();
  ++round_;
  Feedback feedback;
  feedback.observed.reserve(action.arms.size());
  for (int arm : action.arms) {
    feedback.observed.push_back({arm, outcomes_[arm]});
  }
  return feedback;
}

Feedback Environment::StepCascading(const Action& action) {
  if (!IsCascade(instance_.feedback_mode())) {
    throw ModeError("cascading step on a semi-bandit instance");
  }
  ValidateAction(action, instance_);
  DrawOutcomes();
  ++round_;
  const auto sequence = ExaminationSequence(action, instance_);
  return RevealCascade(sequence, outcomes_, instance_.feedback_mode(),
                       instance_.no_click());
}

std::vector<int> ExaminationSequence(const Action& action,
                                     const ProblemInstance& instance) {
  std::vector<int> sequence = action.arms;
  switch (instance.examination_order()) {
    case ExaminationOrder::kDescending:
      std::stable_sort(sequence.begin(), sequence.end(), [&](int a, int b) {
        return instance.mean(a) > instance.mean(b);
      });
      break;
    case ExaminationOrder::kAscending:
      std::stable_sort(sequence.begin(), sequence.end(), [&](int a, int b) {
        return instance.mean(a) < instance.mean(b);
      });
      break;
    case ExaminationOrder::kAsGiven:
      break;
  }
  return sequence;
}

Feedback RevealCascade(std::span<const int> sequence,
                       std::span<const std::uint8_t> outcome_by_arm,
                       FeedbackMode mode, NoClickRule no_click) {
  if (!IsCascade(mode)) throw ModeError("cascade reveal in semi-bandit mode");
  const int stop_on = mode == FeedbackMode::kCascadeDisjunctive ? 1 : 0;
  Feedback feedback;
  for (int arm : sequence) {
    const int outcome = outcome_by_arm[arm];
    feedback.observed.push_back({arm, outcome});
    if (outcome == stop_on) return feedback;
  }
  if (mode == FeedbackMode::kCascadeDisjunctive &&
      no_click == NoClickRule::kNoOp) {
    feedback.observed.clear();
  }
  return feedback;
}

void RecordRound(RunRecord& record, double gap, double elapsed_seconds) {
  const double previous =
      record.cumulative_regret.empty() ? 0.0 : record.cumulative_regret.back();
  record.per_round_gap.push_back(gap);
  record.cumulative_regret.push_back(previous + gap);
  record.wall_time_total += elapsed_seconds;
}

void RecordRound(RunRecord& record, const Action& action,
                 const ProblemInstance& instance, double elapsed_seconds) {
  RecordRound(record, Gap(action, instance), elapsed_seconds);
}

}  // namespace cmab
