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

// EXP3.M: exponential weights over base arms with k-subset sampling.
//
// Per round the weights are turned into marginals
//   p_i = k * ((1 - gamma) * w'_i / sum(w') + gamma / m),
// where w' caps the largest weights at a threshold alpha whenever some p_i
// would otherwise exceed 1. A size-k action with those marginals is drawn by
// DepRound, and every uncapped played arm gets w_i *= exp(k gamma x_i / (m
// p_i)).

#ifndef CMAB_EXP3M_H_
#define CMAB_EXP3M_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cmab/policy.h"
#include "cmab/problem.h"
#include "cmab/random.h"

namespace cmab {

// (1/k - gamma/m) / (1 - gamma): the share of sum(w') a capped weight takes.
double Exp3mCapShare(int num_arms, int k, double gamma);

// True when the largest weight would push its marginal to 1 or above, i.e.
// (1 - gamma) * max(w) >= (1/k - gamma/m) * sum(w).
bool Exp3mCapTriggers(std::span<const double> weights, int k, double gamma);

// Threshold alpha with
//   alpha / (sum_{w_i >= alpha} alpha + sum_{w_i < alpha} w_i) = share.
// Weights are scanned largest first; for n capped weights the equation is
// linear in alpha and the first n whose solution lies in [w_(n+1), w_(n)] is
// taken. Throws InputError when Exp3mCapTriggers is false.
double Exp3mAlpha(std::span<const double> weights, int k, double gamma);

struct Exp3mDistribution {
  std::vector<double> probabilities;
  std::vector<char> capped;  // membership in S_0; p_i == 1 exactly there
  double alpha = 0.0;        // 0 when nothing is capped
};

Exp3mDistribution Exp3mProbabilities(std::span<const double> weights, int k,
                                     double gamma);

class Exp3mState {
 public:
  // Throws ConfigError unless 1 <= k <= m and 0 < gamma <= 1.
  Exp3mState(int num_arms, int k, double gamma);

  int num_arms() const { return static_cast<int>(weights_.size()); }
  int k() const { return k_; }
  double gamma() const { return gamma_; }
  std::span<const double> weights() const { return weights_; }
  std::span<double> mutable_weights() { return weights_; }

 private:
  std::vector<double> weights_;
  int k_;
  double gamma_;
};

struct Exp3mRound {
  Action action;
  Exp3mDistribution distribution;
};

Exp3mRound Exp3mDraw(const Exp3mState& state, Rng& rng);

// Multiplicative update of every arm outside S_0 from the observed rewards of
// the round's action. Weights are rescaled by their maximum once it exceeds
// 1e300, which leaves every future marginal unchanged.
void Exp3mUpdate(Exp3mState& state, const Exp3mRound& round,
                 const Feedback& feedback);

class Exp3mPolicy : public Policy {
 public:
  Exp3mPolicy(int num_arms, int k, double gamma, std::uint64_t seed);

  std::string_view name() const override { return "exp3m"; }
  Action Select(std::int64_t round) override;
  void Update(const Action& action, const Feedback& feedback) override;

  const Exp3mState& state() const { return state_; }
  const Exp3mRound& last_round() const { return last_; }

 private:
  Exp3mState state_;
  Rng rng_;
  Exp3mRound last_;
};

}  // namespace cmab

#endif  // CMAB_EXP3M_H_
