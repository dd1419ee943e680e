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

// FTRL over the capped simplex with the hybrid regularizer
//   Psi(x) = sum_i -sqrt(x_i) + gamma * (1 - x_i) * ln(1 - x_i)
// and learning rate eta_t = 1 / sqrt(t). The fractional point is rounded to a
// size-k action with DepRound, whose marginals equal the point.
//
// Rewards X in [0, 1] enter as losses o = -X, so (o + 1) lies in [0, 1].

#ifndef CMAB_HYBRID_H_
#define CMAB_HYBRID_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cmab/policy.h"
#include "cmab/problem.h"
#include "cmab/random.h"
#include "cmab/solvers.h"

namespace cmab {

// 1 when k <= m/2, else min(1, 1 / sqrt(log2(m / (m - k)))). Throws
// ConfigError unless 1 <= k < m.
double HybridGamma(int num_arms, int k);

class HybridState {
 public:
  // Throws ConfigError unless 1 <= k < m and 0 < gamma <= 1.
  HybridState(int num_arms, int k, double gamma);

  int num_arms() const { return static_cast<int>(cumulative_loss_.size()); }
  int k() const { return k_; }
  double gamma() const { return gamma_; }
  std::span<const double> cumulative_loss() const { return cumulative_loss_; }
  void AddLoss(std::span<const double> loss);

 private:
  std::vector<double> cumulative_loss_;
  int k_;
  double gamma_;
};

struct HybridRound {
  Action action;
  std::vector<double> x;  // fractional point of the round
};

// Solves for x_t at eta = 1/sqrt(round) and samples the action.
HybridRound HybridDraw(const HybridState& state, std::int64_t round, Rng& rng,
                       const SolverOptions& options = {});

// Importance-weighted loss estimate
//   l_i = (o_i + 1) / x_i - 1 for played arms, -1 otherwise,
// with o_i = -X_i. Unbiased for o_i under sampling with marginals x. Throws
// std::logic_error if a played arm has x_i == 0.
std::vector<double> HybridLossEstimate(const Feedback& feedback,
                                       const Action& action,
                                       std::span<const double> x);

class HybridPolicy : public Policy {
 public:
  HybridPolicy(int num_arms, int k, std::uint64_t seed);

  std::string_view name() const override { return "hybrid"; }
  Action Select(std::int64_t round) override;
  void Update(const Action& action, const Feedback& feedback) override;

  const HybridState& state() const { return state_; }
  const HybridRound& last_round() const { return last_; }

 private:
  HybridState state_;
  Rng rng_;
  HybridRound last_;
};

}  // namespace cmab

#endif  // CMAB_HYBRID_H_
