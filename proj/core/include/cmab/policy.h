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

#ifndef CMAB_POLICY_H_
#define CMAB_POLICY_H_

#include <cstdint>
#include <memory>
#include <string_view>

#include "cmab/problem.h"

namespace cmab {

// A learning policy for the cardinality-constrained combinatorial bandit.
// Each round the runner calls Select(t) once and then Update with the
// feedback of the returned action.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual std::string_view name() const = 0;
  // t starts at 1.
  virtual Action Select(std::int64_t round) = 0;
  virtual void Update(const Action& action, const Feedback& feedback) = 0;
};

enum class Algorithm { kCmoss, kCucb, kExp3m, kHybrid };

std::string_view ToString(Algorithm algorithm);
// Throws InputError on unknown names.
Algorithm ParseAlgorithm(std::string_view name);

struct PolicyParams {
  int num_arms = 0;
  int k = 0;
  FeedbackMode feedback_mode = FeedbackMode::kSemiBandit;
  double delta = 1e-5;         // CMOSS confidence parameter
  double exp3m_gamma = 0.01;   // EXP3.M mixing coefficient
  std::uint64_t seed = 0;      // randomized policies only
};

// Throws ConfigError on parameters the algorithm cannot run with, including
// EXP3.M and HYBRID under cascading feedback.
std::unique_ptr<Policy> MakePolicy(Algorithm algorithm,
                                   const PolicyParams& params);

}  // namespace cmab

#endif  // CMAB_POLICY_H_
