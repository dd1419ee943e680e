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

#include "cmab/ucb.h"

#include <algorithm>

#include "cmab/errors.h"

namespace cmab {

double LnPlus(double x) {
  if (!(x > 0.0)) throw InputError("ln+ needs a positive argument");
  return std::log(std::max(1.0, x));
}

double MossRadius(std::int64_t count, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ConfigError("CMOSS delta must lie in (0, 1)");
  }
  if (count == 0) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(count);
  return std::sqrt(LnPlus(1.0 / (delta * n)) / n);
}

double CucbRadius(std::int64_t count, std::int64_t round) {
  if (round < 1) throw InputError("CUCB radius needs round t >= 1");
  if (count == 0) return std::numeric_limits<double>::infinity();
  return std::sqrt(3.0 * std::log(static_cast<double>(round)) /
                   (2.0 * static_cast<double>(count)));
}

MeanTracker::MeanTracker(int num_arms)
    : counts_(num_arms, 0), means_(num_arms, 1.0) {}

void MeanTracker::Observe(int arm, int outcome) {
  const std::int64_t n = ++counts_[arm];
  means_[arm] += (outcome - means_[arm]) / static_cast<double>(n);
}

void MeanTracker::Update(const Feedback& feedback) {
  for (const auto& obs : feedback.observed) Observe(obs.arm, obs.outcome);
}

void OptimisticMeans(std::span<const double> empirical_means,
                     std::span<const double> radii, std::span<double> out) {
  for (std::size_t i = 0; i < empirical_means.size(); ++i) {
    out[i] = std::min(empirical_means[i] + radii[i], 1.0);
  }
}

Action UcbSelect(std::span<const double> empirical_means,
                 std::span<const double> radii, int k) {
  std::vector<double> index(empirical_means.size());
  OptimisticMeans(empirical_means, radii, index);
  return Action{TopK(index, k)};
}

}  // namespace cmab
