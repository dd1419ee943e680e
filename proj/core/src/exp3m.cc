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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "cmab/depround.h"
#include "cmab/errors.h"

namespace cmab {
namespace {

constexpr double kRenormalizeAbove = 1e300;
// Relative slack when matching alpha to a capped prefix; the true root can sit
// exactly on a weight.
constexpr double kPrefixSlack = 1e-12;

}  // namespace

double Exp3mCapShare(int num_arms, int k, double gamma) {
  return (1.0 / k - gamma / num_arms) / (1.0 - gamma);
}

bool Exp3mCapTriggers(std::span<const double> weights, int k, double gamma) {
  const int m = static_cast<int>(weights.size());
  const double max_w = *std::max_element(weights.begin(), weights.end());
  const double sum_w = std::accumulate(weights.begin(), weights.end(), 0.0);
  return (1.0 - gamma) * max_w >= (1.0 / k - gamma / m) * sum_w;
}

namespace {

struct AlphaCut {
  double alpha;
  // Arms with weight >= threshold are capped.
  double threshold;
};

AlphaCut SolveAlpha(std::span<const double> weights, int k, double gamma) {
  const int m = static_cast<int>(weights.size());
  if (m == 0 || k < 1 || k > m) throw InputError("EXP3.M alpha: need 1 <= k <= m");
  if (!Exp3mCapTriggers(weights, k, gamma)) {
    throw InputError("EXP3.M alpha: no weight reaches the capping threshold");
  }
  // Every arm is played with probability 1; capping all of them solves the
  // equation for any alpha <= min(w).
  if (k == m) {
    const double w = *std::min_element(weights.begin(), weights.end());
    return {w, w};
  }

  std::vector<double> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  // suffix[n] = sum of sorted[n..m), accumulated from the small end.
  std::vector<double> suffix(m + 1, 0.0);
  for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + sorted[i];
  const double share = Exp3mCapShare(m, k, gamma);
  for (int n = 1; n < m; ++n) {
    const double denominator = 1.0 - share * n;
    if (denominator <= 0.0) return {sorted[n - 1], sorted[n - 1]};
    const double alpha = share * suffix[n] / denominator;
    if (alpha <= sorted[n - 1] * (1.0 + kPrefixSlack) &&
        alpha >= sorted[n] * (1.0 - kPrefixSlack)) {
      return {alpha, sorted[n - 1]};
    }
  }
  return {sorted[m - 1], sorted[m - 1]};
}

}  // namespace

double Exp3mAlpha(std::span<const double> weights, int k, double gamma) {
  return SolveAlpha(weights, k, gamma).alpha;
}

Exp3mDistribution Exp3mProbabilities(std::span<const double> weights, int k,
                                     double gamma) {
  const int m = static_cast<int>(weights.size());
  Exp3mDistribution dist;
  dist.probabilities.assign(m, 0.0);
  dist.capped.assign(m, 0);

  std::vector<double> effective(weights.begin(), weights.end());
  if (Exp3mCapTriggers(weights, k, gamma)) {
    const AlphaCut cut = SolveAlpha(weights, k, gamma);
    dist.alpha = cut.alpha;
    for (int i = 0; i < m; ++i) {
      if (weights[i] >= cut.threshold) {
        dist.capped[i] = 1;
        effective[i] = dist.alpha;
      }
    }
  }
  const double total = std::accumulate(effective.begin(), effective.end(), 0.0);
  for (int i = 0; i < m; ++i) {
    dist.probabilities[i] =
        dist.capped[i] ? 1.0
                       : std::min(1.0, k * ((1.0 - gamma) * effective[i] / total +
                                            gamma / m));
  }
  return dist;
}

Exp3mState::Exp3mState(int num_arms, int k, double gamma)
    : weights_(num_arms, 1.0), k_(k), gamma_(gamma) {
  if (num_arms < 1 || k < 1 || k > num_arms) {
    throw ConfigError("EXP3.M needs 1 <= k <= m");
  }
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw ConfigError("EXP3.M gamma must lie in (0, 1]");
  }
}

Exp3mRound Exp3mDraw(const Exp3mState& state, Rng& rng) {
  Exp3mRound round;
  round.distribution =
      Exp3mProbabilities(state.weights(), state.k(), state.gamma());
  round.action.arms = DepRound(round.distribution.probabilities, rng).arms;
  return round;
}

void Exp3mUpdate(Exp3mState& state, const Exp3mRound& round,
                 const Feedback& feedback) {
  auto weights = state.mutable_weights();
  const double scale =
      state.k() * state.gamma() / static_cast<double>(state.num_arms());
  const auto& p = round.distribution.probabilities;
  std::vector<double> exponent(weights.size(), 0.0);
  for (const auto& obs : feedback.observed) {
    if (round.distribution.capped[obs.arm] || obs.outcome == 0) continue;
    if (!(p[obs.arm] > 0.0)) {
      throw std::logic_error("EXP3.M: played arm with zero probability");
    }
    exponent[obs.arm] = scale * obs.outcome / p[obs.arm];
  }
  const std::vector<double> before(weights.begin(), weights.end());
  double max_w = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (exponent[i] != 0.0) weights[i] *= std::exp(exponent[i]);
    max_w = std::max(max_w, weights[i]);
  }
  if (max_w <= kRenormalizeAbove) return;
  if (std::isfinite(max_w)) {
    for (double& w : weights) {
      w = std::max(w / max_w, std::numeric_limits<double>::min());
    }
    return;
  }
  // Overflowed: redo the step in log space against the pre-update weights.
  std::vector<double> log_w(weights.size());
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    log_w[i] = std::log(before[i]) + exponent[i];
    max_log = std::max(max_log, log_w[i]);
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    weights[i] = std::max(std::exp(log_w[i] - max_log),
                          std::numeric_limits<double>::min());
  }
}

Exp3mPolicy::Exp3mPolicy(int num_arms, int k, double gamma, std::uint64_t seed)
    : state_(num_arms, k, gamma), rng_(seed) {}

Action Exp3mPolicy::Select(std::int64_t /*round*/) {
  last_ = Exp3mDraw(state_, rng_);
  return last_.action;
}

void Exp3mPolicy::Update(const Action& /*action*/, const Feedback& feedback) {
  Exp3mUpdate(state_, last_, feedback);
}

}  // namespace cmab
