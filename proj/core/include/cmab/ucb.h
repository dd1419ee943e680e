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

// Optimistic index policies: CMOSS (MOSS-style radius) and CUCB.
//
// Both keep a count and an empirical mean per arm, inflate each mean by a
// confidence radius, cap it at 1 and play the k arms with the largest index.
// They differ only in the radius.

#ifndef CMAB_UCB_H_
#define CMAB_UCB_H_

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmab/policy.h"
#include "cmab/problem.h"

namespace cmab {

// ln(max(1, x)). Throws InputError for x <= 0.
double LnPlus(double x);

// sqrt(ln+(1 / (delta * count)) / count), +inf for an unplayed arm. Throws
// ConfigError unless 0 < delta < 1.
double MossRadius(std::int64_t count, double delta);

// sqrt(3 ln t / (2 count)), +inf for an unplayed arm. Throws InputError for
// t < 1.
double CucbRadius(std::int64_t count, std::int64_t round);

// Per-arm play counts and empirical means. Means start at 1; the first
// observation replaces the initial value.
class MeanTracker {
 public:
  explicit MeanTracker(int num_arms);

  void Observe(int arm, int outcome);
  // Incorporates every observed arm; unobserved arms are untouched.
  void Update(const Feedback& feedback);

  int num_arms() const { return static_cast<int>(counts_.size()); }
  std::span<const std::int64_t> counts() const { return counts_; }
  std::span<const double> means() const { return means_; }

 private:
  std::vector<std::int64_t> counts_;
  std::vector<double> means_;
};

// min(mean_i + radius_i, 1) per arm.
void OptimisticMeans(std::span<const double> empirical_means,
                     std::span<const double> radii, std::span<double> out);

// Top-k arms by optimistic mean, lowest index first among ties. The returned
// order (largest optimistic mean first) is what an as-given cascade examines.
Action UcbSelect(std::span<const double> empirical_means,
                 std::span<const double> radii, int k);

struct MossRadiusRule {
  double delta;

  static constexpr std::string_view kName = "cmoss";
  void operator()(std::int64_t /*round*/, std::span<const std::int64_t> counts,
                  std::span<double> radii) const {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      radii[i] = MossRadius(counts[i], delta);
    }
  }
};

struct CucbRadiusRule {
  static constexpr std::string_view kName = "cucb";
  void operator()(std::int64_t round, std::span<const std::int64_t> counts,
                  std::span<double> radii) const {
    if (round < 1) CucbRadius(0, round);  // throws
    const double numerator = 1.5 * std::log(static_cast<double>(round));
    for (std::size_t i = 0; i < counts.size(); ++i) {
      radii[i] = counts[i] == 0
                     ? std::numeric_limits<double>::infinity()
                     : std::sqrt(numerator / static_cast<double>(counts[i]));
    }
  }
};

template <typename RadiusRule>
class UcbPolicy : public Policy {
 public:
  UcbPolicy(int num_arms, int k, RadiusRule rule)
      : k_(k), rule_(rule), tracker_(num_arms), radii_(num_arms) {}

  std::string_view name() const override { return RadiusRule::kName; }

  Action Select(std::int64_t round) override {
    rule_(round, tracker_.counts(), radii_);
    return UcbSelect(tracker_.means(), radii_, k_);
  }

  void Update(const Action& /*action*/, const Feedback& feedback) override {
    tracker_.Update(feedback);
  }

  const MeanTracker& tracker() const { return tracker_; }
  // Radii used by the most recent Select.
  std::span<const double> radii() const { return radii_; }

 private:
  int k_;
  RadiusRule rule_;
  MeanTracker tracker_;
  std::vector<double> radii_;
};

using CmossPolicy = UcbPolicy<MossRadiusRule>;
using CucbPolicy = UcbPolicy<CucbRadiusRule>;

}  // namespace cmab

#endif  // CMAB_UCB_H_
