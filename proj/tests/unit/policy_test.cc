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

#include "cmab/policy.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "cmab/environment.h"
#include "cmab/errors.h"

namespace cmab {
namespace {

PolicyParams Params(int m, int k, FeedbackMode mode = FeedbackMode::kSemiBandit) {
  PolicyParams p;
  p.num_arms = m;
  p.k = k;
  p.feedback_mode = mode;
  p.seed = 3;
  return p;
}

TEST(AlgorithmTest, Names) {
  for (auto a : {Algorithm::kCmoss, Algorithm::kCucb, Algorithm::kExp3m,
                 Algorithm::kHybrid}) {
    EXPECT_EQ(ParseAlgorithm(ToString(a)), a);
    EXPECT_EQ(MakePolicy(a, Params(6, 2))->name(), ToString(a));
  }
  EXPECT_THROW(ParseAlgorithm("thompson"), std::invalid_argument);
}

TEST(MakePolicyTest, CascadeOnlyForUcbPolicies) {
  const auto mode = FeedbackMode::kCascadeDisjunctive;
  EXPECT_NO_THROW(MakePolicy(Algorithm::kCmoss, Params(6, 2, mode)));
  EXPECT_NO_THROW(MakePolicy(Algorithm::kCucb, Params(6, 2, mode)));
  EXPECT_THROW(MakePolicy(Algorithm::kExp3m, Params(6, 2, mode)), ConfigError);
  EXPECT_THROW(MakePolicy(Algorithm::kHybrid, Params(6, 2, mode)), ConfigError);
}

TEST(MakePolicyTest, RejectsBadDelta) {
  PolicyParams p = Params(6, 2);
  p.delta = 0.0;
  EXPECT_THROW(MakePolicy(Algorithm::kCmoss, p), ConfigError);
}

// Every policy plays a valid action of size k every round.
TEST(PolicyTest, ActionsAreValid) {
  const ProblemInstance instance({0.1, 0.5, 0.3, 0.9, 0.2, 0.6, 0.4}, 3);
  for (auto a : {Algorithm::kCmoss, Algorithm::kCucb, Algorithm::kExp3m,
                 Algorithm::kHybrid}) {
    auto policy = MakePolicy(a, Params(7, 3));
    Environment env(instance, 17);
    for (int t = 1; t <= 300; ++t) {
      const Action action = policy->Select(t);
      ASSERT_EQ(action.size(), 3) << ToString(a);
      ValidateAction(action, instance);
      policy->Update(action, env.Step(action));
    }
  }
}

// The UCB policies converge to the optimal action on an easy instance.
TEST(PolicyTest, UcbPoliciesLearnEasyInstance) {
  const ProblemInstance instance({0.1, 0.9, 0.2, 0.8, 0.15}, 2);
  for (auto a : {Algorithm::kCmoss, Algorithm::kCucb}) {
    auto policy = MakePolicy(a, Params(5, 2));
    Environment env(instance, 5);
    int optimal = 0;
    for (int t = 1; t <= 3000; ++t) {
      Action action = policy->Select(t);
      policy->Update(action, env.Step(action));
      std::sort(action.arms.begin(), action.arms.end());
      if (t > 2000) optimal += action.arms == std::vector<int>{1, 3};
    }
    EXPECT_GT(optimal, 950) << ToString(a);
  }
}

}  // namespace
}  // namespace cmab
