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

#include "cmab/exp3m.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cmab/errors.h"

namespace cmab {
namespace {

// |alpha / (sum over capped of alpha + sum over the rest of w) - c|
double AlphaResidual(const std::vector<double>& w, int k, double gamma,
                     double alpha) {
  const int m = static_cast<int>(w.size());
  const double c = (1.0 / k - gamma / m) / (1.0 - gamma);
  double total = 0.0;
  for (double x : w) total += x >= alpha ? alpha : x;
  return std::abs(alpha / total - c);
}

TEST(Exp3mAlphaTest, OneCappedWeightClosedForm) {
  const std::vector<double> w = {10, 1, 1, 1};
  const double c = (0.5 - 0.0025) / 0.99;
  const double alpha = Exp3mAlpha(w, 2, 0.01);
  EXPECT_NEAR(alpha, 3 * c / (1 - c), 1e-12);
  EXPECT_NEAR(alpha, 3.0304569, 1e-6);
  EXPECT_LT(AlphaResidual(w, 2, 0.01, alpha), 1e-12);
}

TEST(Exp3mAlphaTest, EverythingCappedWhenKEqualsM) {
  const std::vector<double> w = {5, 5};
  const double alpha = Exp3mAlpha(w, 2, 0.0);
  EXPECT_EQ(alpha, 5.0);
  EXPECT_LT(AlphaResidual(w, 2, 0.0, alpha), 1e-12);
}

TEST(Exp3mAlphaTest, ThrowsWhenNothingReachesTheCap) {
  const std::vector<double> w = {1, 1, 1, 1};
  EXPECT_FALSE(Exp3mCapTriggers(w, 2, 0.01));
  EXPECT_THROW(Exp3mAlpha(w, 2, 0.01), InputError);
}

TEST(Exp3mAlphaTest, ResidualOnRandomInputs) {
  std::mt19937_64 rng(17);
  std::lognormal_distribution<double> spread(0.0, 3.0);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 30);
    const int k = 1 + static_cast<int>(rng() % (m - 1));
    std::vector<double> w(m);
    for (double& x : w) x = spread(rng);
    if (!Exp3mCapTriggers(w, k, 0.01)) continue;
    ++checked;
    const double alpha = Exp3mAlpha(w, k, 0.01);
    EXPECT_LT(AlphaResidual(w, k, 0.01, alpha), 1e-12);
  }
  EXPECT_GT(checked, 500);
}

TEST(Exp3mProbabilitiesTest, EqualWeightsGiveUniform) {
  for (double gamma : {0.01, 0.3, 1.0}) {
    const auto dist = Exp3mProbabilities(std::vector<double>(7, 2.5), 3, gamma);
    for (double p : dist.probabilities) EXPECT_NEAR(p, 3.0 / 7.0, 1e-15);
  }
}

TEST(Exp3mProbabilitiesTest, Invariants) {
  std::mt19937_64 rng(23);
  std::lognormal_distribution<double> spread(0.0, 4.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 30);
    const int k = 1 + static_cast<int>(rng() % m);
    const double gamma = 0.01;
    std::vector<double> w(m);
    for (double& x : w) x = spread(rng);
    const auto dist = Exp3mProbabilities(w, k, gamma);
    const double sum = std::accumulate(dist.probabilities.begin(),
                                       dist.probabilities.end(), 0.0);
    EXPECT_NEAR(sum, k, 1e-9);
    for (int i = 0; i < m; ++i) {
      EXPECT_GE(dist.probabilities[i], k * gamma / m - 1e-15);
      EXPECT_LE(dist.probabilities[i], 1.0);
      if (dist.capped[i]) EXPECT_EQ(dist.probabilities[i], 1.0);
    }
  }
}

TEST(Exp3mUpdateTest, ZeroRewardLeavesWeights) {
  Exp3mState state(4, 2, 0.01);
  state.mutable_weights()[1] = 3.0;
  Exp3mRound round;
  round.action = Action{{0, 1}};
  round.distribution = Exp3mProbabilities(state.weights(), 2, 0.01);
  const std::vector<double> before(state.weights().begin(),
                                   state.weights().end());
  Exp3mUpdate(state, round, Feedback{{{0, 0}, {1, 0}}});
  EXPECT_TRUE(std::equal(before.begin(), before.end(), state.weights().begin()));
}

TEST(Exp3mUpdateTest, MultiplierFormula) {
  Exp3mState state(4, 2, 0.01);
  Exp3mRound round;
  round.action = Action{{0, 1}};
  round.distribution.probabilities = {0.5, 0.5, 0.5, 0.5};
  round.distribution.capped = {0, 0, 0, 0};
  Exp3mUpdate(state, round, Feedback{{{0, 1}, {1, 0}}});
  EXPECT_NEAR(state.weights()[0], std::exp(0.01), 1e-15);
  EXPECT_EQ(state.weights()[1], 1.0);
}

TEST(Exp3mUpdateTest, CappedArmsAreFrozen) {
  Exp3mState state(4, 2, 0.01);
  state.mutable_weights()[0] = 10.0;
  Exp3mRound round;
  round.action = Action{{0, 1}};
  round.distribution = Exp3mProbabilities(state.weights(), 2, 0.01);
  ASSERT_TRUE(round.distribution.capped[0]);
  Exp3mUpdate(state, round, Feedback{{{0, 1}, {1, 1}}});
  EXPECT_EQ(state.weights()[0], 10.0);
  EXPECT_GT(state.weights()[1], 1.0);
}

TEST(Exp3mUpdateTest, RenormalizesHugeWeights) {
  Exp3mState state(3, 1, 0.01);
  Exp3mRound round;
  round.action = Action{{0}};
  round.distribution.probabilities = {1e-4, 0.5, 0.5};
  round.distribution.capped = {0, 0, 0};
  state.mutable_weights()[0] = 1e299;
  Exp3mUpdate(state, round, Feedback{{{0, 1}}});
  for (double w : state.weights()) {
    EXPECT_TRUE(std::isfinite(w));
    EXPECT_GT(w, 0.0);
  }
  EXPECT_EQ(state.weights()[0], 1.0);
}

TEST(Exp3mStateTest, RejectsBadParameters) {
  EXPECT_THROW(Exp3mState(3, 0, 0.1), ConfigError);
  EXPECT_THROW(Exp3mState(3, 4, 0.1), ConfigError);
  EXPECT_THROW(Exp3mState(3, 1, 0.0), ConfigError);
  EXPECT_THROW(Exp3mState(3, 1, 1.5), ConfigError);
}

TEST(Exp3mPolicyTest, DrawsExactlyKArms) {
  Exp3mPolicy policy(10, 4, 0.01, 99);
  for (int t = 1; t <= 200; ++t) {
    const Action a = policy.Select(t);
    EXPECT_EQ(a.size(), 4);
    Feedback fb;
    for (int arm : a.arms) fb.observed.push_back({arm, arm % 2});
    policy.Update(a, fb);
  }
}

}  // namespace
}  // namespace cmab
