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

#include "cmab/hybrid.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cmab/depround.h"
#include "cmab/errors.h"

namespace cmab {

double HybridGamma(int num_arms, int k) {
  if (k < 1 || k >= num_arms) {
    throw ConfigError("HYBRID needs 1 <= k < m (k=" + std::to_string(k) +
                      ", m=" + std::to_string(num_arms) + ")");
  }
  if (2 * k <= num_arms) return 1.0;
  const double ratio = static_cast<double>(num_arms) / (num_arms - k);
  return std::min(1.0, 1.0 / std::sqrt(std::log2(ratio)));
}

HybridState::HybridState(int num_arms, int k, double gamma)
    : cumulative_loss_(num_arms, 0.0), k_(k), gamma_(gamma) {
  if (k < 1 || k >= num_arms) throw ConfigError("HYBRID needs 1 <= k < m");
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw ConfigError("HYBRID gamma must lie in (0, 1]");
  }
}

void HybridState::AddLoss(std::span<const double> loss) {
  for (std::size_t i = 0; i < cumulative_loss_.size(); ++i) {
    cumulative_loss_[i] += loss[i];
  }
}

HybridRound HybridDraw(const HybridState& state, std::int64_t round, Rng& rng,
                       const SolverOptions& options) {
  if (round < 1) throw InputError("HYBRID round must be >= 1");
  const double eta = 1.0 / std::sqrt(static_cast<double>(round));
  HybridRound result;
  result.x = CappedSimplexArgmin(state.cumulative_loss(), eta, state.gamma(),
                                 state.k(), options)
                 .x;
  result.action.arms = DepRound(result.x, rng).arms;
  return result;
}

std::vector<double> HybridLossEstimate(const Feedback& feedback,
                                       const Action& action,
                                       std::span<const double> x) {
  std::vector<double> loss(x.size(), -1.0);
  for (int arm : action.arms) {
    if (!(x[arm] > 0.0)) {
      throw std::logic_error("HYBRID: played arm " + std::to_string(arm) +
                             " has zero probability");
    }
    const auto obs = std::find_if(
        feedback.observed.begin(), feedback.observed.end(),
        [arm](const Observation& o) { return o.arm == arm; });
    if (obs == feedback.observed.end()) {
      throw InputError("HYBRID needs the outcome of every played arm");
    }
    const double observed_loss = -static_cast<double>(obs->outcome);
    loss[arm] = (observed_loss + 1.0) / x[arm] - 1.0;
  }
  return loss;
}

HybridPolicy::HybridPolicy(int num_arms, int k, std::uint64_t seed)
    : state_(num_arms, k, HybridGamma(num_arms, k)), rng_(seed) {}

Action HybridPolicy::Select(std::int64_t round) {
  last_ = HybridDraw(state_, round, rng_);
  return last_.action;
}

void HybridPolicy::Update(const Action& action, const Feedback& feedback) {
  state_.AddLoss(HybridLossEstimate(feedback, action, last_.x));
}

}  // namespace cmab
