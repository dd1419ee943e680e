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

// Problem instances of the cardinality-constrained combinatorial bandit:
// m independent Bernoulli base arms, actions are subsets of at most k arms.
//
// Arm indices are zero-based throughout the library.

#ifndef CMAB_PROBLEM_H_
#define CMAB_PROBLEM_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cmab {

enum class FeedbackMode {
  kSemiBandit,
  kCascadeDisjunctive,
  kCascadeConjunctive,
};

// Order in which a cascading user examines the arms of an action.
enum class ExaminationOrder {
  kDescending,  // by true mean, largest first
  kAscending,   // by true mean, smallest first
  kAsGiven,     // the order the policy returned
};

// What a disjunctive pass without any click reveals.
enum class NoClickRule {
  kNoOp,          // nothing; the policy sees an empty feedback
  kObserveZeros,  // every examined arm, all with outcome 0
};

std::string_view ToString(FeedbackMode mode);
std::string_view ToString(ExaminationOrder order);
std::string_view ToString(NoClickRule rule);
// Throw InputError on unknown names.
FeedbackMode ParseFeedbackMode(std::string_view name);
ExaminationOrder ParseExaminationOrder(std::string_view name);
NoClickRule ParseNoClickRule(std::string_view name);

inline bool IsCascade(FeedbackMode mode) {
  return mode != FeedbackMode::kSemiBandit;
}

struct Action {
  std::vector<int> arms;

  int size() const { return static_cast<int>(arms.size()); }
  friend bool operator==(const Action&, const Action&) = default;
};

struct Observation {
  int arm;
  int outcome;  // 0 or 1

  friend bool operator==(const Observation&, const Observation&) = default;
};

// Outcomes of the triggered set of one round, in the order they were revealed.
struct Feedback {
  std::vector<Observation> observed;

  bool empty() const { return observed.empty(); }
};

// Immutable ground truth of one experiment.
class ProblemInstance {
 public:
  // Throws InputError unless 1 <= k <= means.size() and every mean is in
  // [0, 1].
  ProblemInstance(std::vector<double> means, int k,
                  FeedbackMode mode = FeedbackMode::kSemiBandit,
                  ExaminationOrder order = ExaminationOrder::kDescending,
                  NoClickRule no_click = NoClickRule::kNoOp);

  int num_arms() const { return static_cast<int>(means_.size()); }
  int k() const { return k_; }
  std::span<const double> means() const { return means_; }
  double mean(int arm) const { return means_[arm]; }
  FeedbackMode feedback_mode() const { return mode_; }
  ExaminationOrder examination_order() const { return order_; }
  NoClickRule no_click() const { return no_click_; }

  const Action& optimal_action() const { return optimal_action_; }
  double optimal_reward() const { return optimal_reward_; }

 private:
  std::vector<double> means_;
  int k_;
  FeedbackMode mode_;
  ExaminationOrder order_;
  NoClickRule no_click_;
  Action optimal_action_;
  double optimal_reward_;
};

// Indices of the k largest scores, largest first; equal scores are ordered by
// lowest index.
std::vector<int> TopK(std::span<const double> scores, int k);

// Throws InputError on duplicates, out-of-range indices or a size outside
// [1, k].
void ValidateAction(const Action& action, const ProblemInstance& instance);

// Throws InputError if the feedback mentions an arm twice, an arm outside the
// action, or an outcome other than 0/1.
void ValidateFeedback(const Feedback& feedback, const Action& action);

// Expected reward of playing `arms` under `mode` when the arm means are
// `means`:
//   semi-bandit          sum of means
//   cascade disjunctive  1 - prod(1 - mean)   (click probability)
//   cascade conjunctive  prod(mean)
// The value does not depend on the order of `arms`.
double RewardMean(std::span<const int> arms, std::span<const double> means,
                  FeedbackMode mode);

double RewardMean(const Action& action, const ProblemInstance& instance);

// The k arms with the largest true means, lowest index first among ties.
Action OptimalAction(const ProblemInstance& instance);

// r(A*) - r(A). Zero for any arrangement of the optimal arms.
double Gap(const Action& action, const ProblemInstance& instance);

}  // namespace cmab

#endif  // CMAB_PROBLEM_H_
