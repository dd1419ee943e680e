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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "cmab/errors.h"

namespace cmab {
namespace {

std::vector<Observation> Obs(std::initializer_list<Observation> list) {
  return list;
}

TEST(StepSemiBanditTest, DegenerateMeans) {
  Environment ones(ProblemInstance({1.0, 1.0, 1.0}, 3), 11);
  Environment zeros(ProblemInstance({0.0, 0.0, 0.0}, 3), 11);
  for (int t = 0; t < 50; ++t) {
    for (const auto& o : ones.Step(Action{{0, 1, 2}}).observed) {
      EXPECT_EQ(o.outcome, 1);
    }
    for (const auto& o : zeros.Step(Action{{0, 1, 2}}).observed) {
      EXPECT_EQ(o.outcome, 0);
    }
  }
}

TEST(StepSemiBanditTest, RevealsEveryPlayedArmInActionOrder) {
  Environment env(ProblemInstance({0.5, 0.5, 0.5, 0.5}, 3), 5);
  const Feedback fb = env.Step(Action{{3, 0, 2}});
  ASSERT_EQ(fb.observed.size(), 3u);
  EXPECT_EQ(fb.observed[0].arm, 3);
  EXPECT_EQ(fb.observed[1].arm, 0);
  EXPECT_EQ(fb.observed[2].arm, 2);
}

TEST(StepSemiBanditTest, EmpiricalMeanWithinBinomialBound) {
  Environment env(ProblemInstance({0.3, 0.6}, 1), 2025);
  constexpr int kDraws = 1000000;
  std::int64_t ones = 0;
  for (int t = 0; t < kDraws; ++t) ones += env.Step(Action{{0}}).observed[0].outcome;
  const double bound = 3.0 * std::sqrt(0.3 * 0.7 / kDraws);
  EXPECT_NEAR(static_cast<double>(ones) / kDraws, 0.3, bound);
}

TEST(StepSemiBanditTest, RoundCounterAdvances) {
  Environment env(ProblemInstance({0.5, 0.5}, 1), 1);
  EXPECT_EQ(env.round(), 1);
  env.Step(Action{{0}});
  env.Step(Action{{1}});
  EXPECT_EQ(env.round(), 3);
}

TEST(StepSemiBanditTest, RejectsInvalidAction) {
  Environment env(ProblemInstance({0.5, 0.5, 0.5}, 2), 1);
  EXPECT_THROW(env.Step(Action{{0, 1, 2}}), InputError);
  EXPECT_THROW(env.Step(Action{{5}}), InputError);
}

// The outcome table depends only on the seed, never on the action played.
TEST(EnvironmentTest, NoiseIndependentOfActions) {
  const ProblemInstance instance({0.2, 0.5, 0.7, 0.1, 0.9}, 2);
  Environment a(instance, 77);
  Environment b(instance, 77);
  for (int t = 0; t < 500; ++t) {
    a.Step(Action{{t % 5}});
    b.Step(Action{{(t + 2) % 5, (t + 3) % 5}});
    ASSERT_TRUE(std::equal(a.last_outcomes().begin(), a.last_outcomes().end(),
                           b.last_outcomes().begin()));
  }
}

TEST(RevealCascadeTest, DisjunctiveStopsAtFirstClick) {
  const std::vector<int> seq = {4, 1, 2};
  std::vector<std::uint8_t> table(5, 0);
  table[1] = 1;
  const Feedback fb =
      RevealCascade(seq, table, FeedbackMode::kCascadeDisjunctive);
  EXPECT_EQ(fb.observed, Obs({{4, 0}, {1, 1}}));
}

TEST(RevealCascadeTest, DisjunctiveWithoutClickIsNoOp) {
  const std::vector<int> seq = {0, 1, 2};
  const std::vector<std::uint8_t> table(3, 0);
  EXPECT_TRUE(
      RevealCascade(seq, table, FeedbackMode::kCascadeDisjunctive).empty());
}

TEST(RevealCascadeTest, DisjunctiveWithoutClickObservesZerosWhenAsked) {
  const std::vector<int> seq = {2, 0, 1};
  const std::vector<std::uint8_t> table(3, 0);
  const Feedback fb = RevealCascade(seq, table, FeedbackMode::kCascadeDisjunctive,
                                    NoClickRule::kObserveZeros);
  EXPECT_EQ(fb.observed, Obs({{2, 0}, {0, 0}, {1, 0}}));
}

TEST(RevealCascadeTest, ConjunctiveStopsAtFirstZero) {
  const std::vector<int> seq = {0, 1, 2};
  const std::vector<std::uint8_t> all_ones(3, 1);
  EXPECT_EQ(RevealCascade(seq, all_ones, FeedbackMode::kCascadeConjunctive)
                .observed,
            Obs({{0, 1}, {1, 1}, {2, 1}}));
  const std::vector<std::uint8_t> table = {1, 0, 1};
  EXPECT_EQ(
      RevealCascade(seq, table, FeedbackMode::kCascadeConjunctive).observed,
      Obs({{0, 1}, {1, 0}}));
}

TEST(RevealCascadeTest, SemiBanditModeIsRejected) {
  const std::vector<int> seq = {0};
  const std::vector<std::uint8_t> table = {1};
  EXPECT_THROW(RevealCascade(seq, table, FeedbackMode::kSemiBandit), ModeError);
}

TEST(StepCascadingTest, SemiBanditInstanceIsRejected) {
  Environment env(ProblemInstance({0.5, 0.5}, 1), 1);
  EXPECT_THROW(env.StepCascading(Action{{0}}), ModeError);
}

TEST(ExaminationSequenceTest, FollowsTrueMeans) {
  const Action action{{0, 1, 2, 3}};
  const std::vector<double> means = {0.2, 0.8, 0.5, 0.8};
  EXPECT_EQ(ExaminationSequence(
                action, ProblemInstance(means, 4, FeedbackMode::kCascadeDisjunctive,
                                        ExaminationOrder::kDescending)),
            (std::vector<int>{1, 3, 2, 0}));
  EXPECT_EQ(ExaminationSequence(
                action, ProblemInstance(means, 4, FeedbackMode::kCascadeDisjunctive,
                                        ExaminationOrder::kAscending)),
            (std::vector<int>{0, 2, 1, 3}));
  const Action shuffled{{2, 0, 3}};
  EXPECT_EQ(ExaminationSequence(
                shuffled, ProblemInstance(means, 4, FeedbackMode::kCascadeDisjunctive,
                                          ExaminationOrder::kAsGiven)),
            (std::vector<int>{2, 0, 3}));
}

// Disjunctive feedback: at most one 1 and, when present, it is the last entry.
// Observed arms always form a prefix of the examination sequence.
TEST(StepCascadingTest, DisjunctiveFeedbackShape) {
  const ProblemInstance instance({0.3, 0.1, 0.6, 0.2, 0.4}, 3,
                                 FeedbackMode::kCascadeDisjunctive);
  Environment env(instance, 9);
  const Action action{{0, 2, 4}};
  const auto sequence = ExaminationSequence(action, instance);
  int empty_rounds = 0;
  for (int t = 0; t < 5000; ++t) {
    const Feedback fb = env.Step(action);
    ValidateFeedback(fb, action);
    if (fb.empty()) {
      ++empty_rounds;
      for (int arm : action.arms) EXPECT_EQ(env.last_outcomes()[arm], 0);
      continue;
    }
    for (std::size_t j = 0; j < fb.observed.size(); ++j) {
      EXPECT_EQ(fb.observed[j].arm, sequence[j]);
      EXPECT_EQ(fb.observed[j].outcome, j + 1 == fb.observed.size() ? 1 : 0);
    }
  }
  // P(no click) = 0.7 * 0.4 * 0.6 = 0.168.
  EXPECT_NEAR(empty_rounds / 5000.0, 0.168, 3 * std::sqrt(0.168 * 0.832 / 5000));
}

TEST(RecordRoundTest, PrefixSums) {
  RunRecord record;
  RecordRound(record, 0.1, 0.0);
  EXPECT_EQ(record.rounds(), 1);
  EXPECT_EQ(record.cumulative_regret.size(), 1u);
  RecordRound(record, 0.2, 0.0);
  EXPECT_DOUBLE_EQ(record.cumulative_regret[0], 0.1);
  EXPECT_DOUBLE_EQ(record.cumulative_regret[1], 0.3);
  EXPECT_DOUBLE_EQ(record.final_regret(), 0.3);
}

TEST(RecordRoundTest, OptimalActionKeepsRegretAtZero) {
  const ProblemInstance instance({0.1, 0.4, 0.3}, 2);
  RunRecord record;
  for (int t = 0; t < 10; ++t) {
    RecordRound(record, instance.optimal_action(), instance, 1e-6);
  }
  EXPECT_EQ(record.final_regret(), 0.0);
  EXPECT_NEAR(record.wall_time_total, 1e-5, 1e-18);
  EXPECT_NEAR(record.wall_time_per_round(), 1e-6, 1e-18);
}

}  // namespace
}  // namespace cmab
