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

#ifndef CMAB_DEPROUND_H_
#define CMAB_DEPROUND_H_

#include <span>
#include <vector>

#include "cmab/random.h"

namespace cmab {

struct DepRoundResult {
  std::vector<int> arms;  // ascending
  int iterations = 0;     // pairwise rounding steps taken
};

// Dependent rounding of a fractional vector p with sum(p) = k into a subset
// of exactly k arms with P(i in subset) = p_i.
//
// Each step takes the two lowest-index fractional coordinates (i, j), sets
// a = min(1 - p_i, p_j), b = min(p_i, 1 - p_j) and moves to
// (p_i + a, p_j - a) with probability b / (a + b), else (p_i - b, p_j + b).
// At least one of the two becomes integral, so there are at most m steps.
//
// Throws InputError unless every p_i lies in [0, 1] (up to 1e-9) and the sum
// is within 1e-9 of an integer.
DepRoundResult DepRound(std::span<const double> probabilities, Rng& rng);

}  // namespace cmab

#endif  // CMAB_DEPROUND_H_
