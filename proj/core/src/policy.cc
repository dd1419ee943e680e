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

#include <string>

#include "cmab/errors.h"
#include "cmab/exp3m.h"
#include "cmab/hybrid.h"
#include "cmab/ucb.h"

namespace cmab {

std::string_view ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kCmoss:
      return "cmoss";
    case Algorithm::kCucb:
      return "cucb";
    case Algorithm::kExp3m:
      return "exp3m";
    case Algorithm::kHybrid:
      return "hybrid";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (auto algorithm : {Algorithm::kCmoss, Algorithm::kCucb,
                         Algorithm::kExp3m, Algorithm::kHybrid}) {
    if (ToString(algorithm) == name) return algorithm;
  }
  throw InputError("unknown algorithm '" + std::string(name) +
                   "' (expected cmoss, cucb, exp3m or hybrid)");
}

std::unique_ptr<Policy> MakePolicy(Algorithm algorithm,
                                   const PolicyParams& params) {
  const int m = params.num_arms;
  const int k = params.k;
  if (m < 1 || k < 1 || k > m) throw ConfigError("policy needs 1 <= k <= m");
  if ((algorithm == Algorithm::kExp3m || algorithm == Algorithm::kHybrid) &&
      IsCascade(params.feedback_mode)) {
    throw ConfigError(std::string(ToString(algorithm)) +
                      " requires semi-bandit feedback");
  }
  switch (algorithm) {
    case Algorithm::kCmoss:
      MossRadius(1, params.delta);  // validates delta
      return std::make_unique<CmossPolicy>(m, k, MossRadiusRule{params.delta});
    case Algorithm::kCucb:
      return std::make_unique<CucbPolicy>(m, k, CucbRadiusRule{});
    case Algorithm::kExp3m:
      return std::make_unique<Exp3mPolicy>(m, k, params.exp3m_gamma,
                                           params.seed);
    case Algorithm::kHybrid:
      return std::make_unique<HybridPolicy>(m, k, params.seed);
  }
  throw ConfigError("unknown algorithm");
}

}  // namespace cmab
