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

#include "cmab/depround.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmab/errors.h"

namespace cmab {
namespace {

constexpr double kTolerance = 1e-9;

bool IsFractional(double v) { return v > 0.0 && v < 1.0; }

}  // namespace

DepRoundResult DepRound(std::span<const double> probabilities, Rng& rng) {
  std::vector<double> p(probabilities.begin(), probabilities.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= -kTolerance && p[i] <= 1.0 + kTolerance)) {
      throw InputError("DepRound: p[" + std::to_string(i) + "] = " +
                       std::to_string(p[i]) + " outside [0, 1]");
    }
    p[i] = std::clamp(p[i], 0.0, 1.0);
    sum += p[i];
  }
  if (std::abs(sum - std::round(sum)) > kTolerance) {
    throw InputError("DepRound: probabilities sum to " + std::to_string(sum) +
                     ", not an integer");
  }

  DepRoundResult result;
  int carry = -1;  // lowest-index fractional coordinate still open
  for (int j = 0; j < static_cast<int>(p.size()); ++j) {
    if (!IsFractional(p[j])) continue;
    if (carry < 0) {
      carry = j;
      continue;
    }
    const int i = carry;
    const double up = std::min(1.0 - p[i], p[j]);
    const double down = std::min(p[i], 1.0 - p[j]);
    if (Uniform01(rng) * (up + down) < down) {
      const bool i_saturates = 1.0 - p[i] <= p[j];
      const bool j_empties = p[j] <= 1.0 - p[i];
      p[i] += up;
      p[j] -= up;
      if (i_saturates) p[i] = 1.0;
      if (j_empties) p[j] = 0.0;
    } else {
      const bool i_empties = p[i] <= 1.0 - p[j];
      const bool j_saturates = 1.0 - p[j] <= p[i];
      p[i] -= down;
      p[j] += down;
      if (i_empties) p[i] = 0.0;
      if (j_saturates) p[j] = 1.0;
    }
    ++result.iterations;
    carry = IsFractional(p[i]) ? i : (IsFractional(p[j]) ? j : -1);
  }
  // Only reachable through round-off in the input sum.
  if (carry >= 0) p[carry] = p[carry] >= 0.5 ? 1.0 : 0.0;

  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (p[i] == 1.0) result.arms.push_back(i);
  }
  return result;
}

}  // namespace cmab
