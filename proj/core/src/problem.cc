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

#include "cmab/problem.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "cmab/errors.h"

namespace cmab {

std::string_view ToString(FeedbackMode mode) {
  switch (mode) {
    case FeedbackMode::kSemiBandit:
      return "semi_bandit";
    case FeedbackMode::kCascadeDisjunctive:
      return "cascade_disjunctive";
    case FeedbackMode::kCascadeConjunctive:
      return "cascade_conjunctive";
  }
  return "unknown";
}

std::string_view ToString(ExaminationOrder order) {
  switch (order) {
    case ExaminationOrder::kDescending:
      return "descending";
    case ExaminationOrder::kAscending:
      return "ascending";
    case ExaminationOrder::kAsGiven:
      return "as_given";
  }
  return "unknown";
}

std::string_view ToString(NoClickRule rule) {
  switch (rule) {
    case NoClickRule::kNoOp:
      return "noop";
    case NoClickRule::kObserveZeros:
      return "observe_zeros";
  }
  return "unknown";
}

FeedbackMode ParseFeedbackMode(std::string_view name) {
  for (auto mode :
       {FeedbackMode::kSemiBandit, FeedbackMode::kCascadeDisjunctive,
        FeedbackMode::kCascadeConjunctive}) {
    if (ToString(mode) == name) return mode;
  }
  throw InputError("unknown feedback mode '" + std::string(name) +
                   "' (expected semi_bandit, cascade_disjunctive or "
                   "cascade_conjunctive)");
}

ExaminationOrder ParseExaminationOrder(std::string_view name) {
  for (auto order : {ExaminationOrder::kDescending,
                     ExaminationOrder::kAscending,
                     ExaminationOrder::kAsGiven}) {
    if (ToString(order) == name) return order;
  }
  throw InputError("unknown examination order '" + std::string(name) +
                   "' (expected descending, ascending or as_given)");
}

NoClickRule ParseNoClickRule(std::string_view name) {
  for (auto rule : {NoClickRule::kNoOp, NoClickRule::kObserveZeros}) {
    if (ToString(rule) == name) return rule;
  }
  throw InputError("unknown no-click rule '" + std::string(name) +
                   "' (expected noop or observe_zeros)");
}

ProblemInstance::ProblemInstance(std::vector<double> means, int k,
                                 FeedbackMode mode, ExaminationOrder order,
                                 NoClickRule no_click)
    : means_(std::move(means)),
      k_(k),
      mode_(mode),
      order_(order),
      no_click_(no_click) {
  if (means_.empty()) throw InputError("instance needs at least one arm");
  if (k_ < 1 || k_ > num_arms()) {
    throw InputError("cardinality k=" + std::to_string(k_) +
                     " must lie in [1, m=" + std::to_string(num_arms()) + "]");
  }
  for (int i = 0; i < num_arms(); ++i) {
    // Also rejects NaN.
    if (!(means_[i] >= 0.0 && means_[i] <= 1.0)) {
      throw InputError("mean of arm " + std::to_string(i) + " = " +
                       std::to_string(means_[i]) + " is outside [0, 1]");
    }
  }
  optimal_action_ = OptimalAction(*this);
  optimal_reward_ = RewardMean(optimal_action_.arms, means_, mode_);
}

std::vector<int> TopK(std::span<const double> scores, int k) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  auto by_score = [&](int a, int b) {
    return scores[a] > scores[b] || (scores[a] == scores[b] && a < b);
  };
  std::partial_sort(order.begin(), order.begin() + k, order.end(), by_score);
  order.resize(k);
  return order;
}

void ValidateAction(const Action& action, const ProblemInstance& instance) {
  if (action.arms.empty() || action.size() > instance.k()) {
    throw InputError("action size " + std::to_string(action.size()) +
                     " outside [1, k=" + std::to_string(instance.k()) + "]");
  }
  std::vector<bool> seen(instance.num_arms(), false);
  for (int arm : action.arms) {
    if (arm < 0 || arm >= instance.num_arms()) {
      throw InputError("arm index " + std::to_string(arm) +
                       " out of range [0, " +
                       std::to_string(instance.num_arms()) + ")");
    }
    if (seen[arm]) {
      throw InputError("arm " + std::to_string(arm) + " repeated in action");
    }
    seen[arm] = true;
  }
}

void ValidateFeedback(const Feedback& feedback, const Action& action) {
  std::vector<int> seen;
  for (const auto& obs : feedback.observed) {
    if (std::find(action.arms.begin(), action.arms.end(), obs.arm) ==
        action.arms.end()) {
      throw InputError("observed arm " + std::to_string(obs.arm) +
                       " was not played");
    }
    if (std::find(seen.begin(), seen.end(), obs.arm) != seen.end()) {
      throw InputError("arm " + std::to_string(obs.arm) +
                       " observed more than once");
    }
    if (obs.outcome != 0 && obs.outcome != 1) {
      throw InputError("outcome " + std::to_string(obs.outcome) +
                       " is not 0/1");
    }
    seen.push_back(obs.arm);
  }
}

double RewardMean(std::span<const int> arms, std::span<const double> means,
                  FeedbackMode mode) {
  // Canonical (sorted) evaluation order makes the value independent of the
  // order the arms were listed in.
  std::vector<int> sorted(arms.begin(), arms.end());
  std::sort(sorted.begin(), sorted.end());
  for (int arm : sorted) {
    if (arm < 0 || arm >= static_cast<int>(means.size())) {
      throw InputError("arm index " + std::to_string(arm) + " out of range");
    }
  }
  switch (mode) {
    case FeedbackMode::kSemiBandit: {
      double sum = 0.0;
      for (int arm : sorted) sum += means[arm];
      return sum;
    }
    case FeedbackMode::kCascadeDisjunctive: {
      double none_clicked = 1.0;
      for (int arm : sorted) none_clicked *= 1.0 - means[arm];
      return 1.0 - none_clicked;
    }
    case FeedbackMode::kCascadeConjunctive: {
      double all_one = 1.0;
      for (int arm : sorted) all_one *= means[arm];
      return all_one;
    }
  }
  return 0.0;
}

double RewardMean(const Action& action, const ProblemInstance& instance) {
  return RewardMean(action.arms, instance.means(), instance.feedback_mode());
}

Action OptimalAction(const ProblemInstance& instance) {
  return Action{TopK(instance.means(), instance.k())};
}

double Gap(const Action& action, const ProblemInstance& instance) {
  return std::max(0.0, instance.optimal_reward() - RewardMean(action, instance));
}

}  // namespace cmab
