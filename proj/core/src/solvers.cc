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

#include "cmab/solvers.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cmab/text.h"

namespace cmab {
namespace {

constexpr double kMinCoordinate = 1e-12;
constexpr double kMaxCoordinate = 1.0 - 1e-12;

// Solves psi'(x) = target on [kMinCoordinate, kMaxCoordinate], starting from
// `guess`.
double InvertDerivative(double target, double gamma, double guess,
                        const SolverOptions& options) {
  if (target <= HybridPsiDerivative(kMinCoordinate, gamma)) {
    return kMinCoordinate;
  }
  if (target >= HybridPsiDerivative(kMaxCoordinate, gamma)) {
    return kMaxCoordinate;
  }
  double lo = kMinCoordinate;
  double hi = kMaxCoordinate;
  double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
  double previous = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < options.max_bisection_iters; ++iter) {
    const double residual = HybridPsiDerivative(x, gamma) - target;
    if (residual == 0.0) return x;
    if (residual > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    // Newton unless the last step failed to halve the residual.
    double next = x - residual / HybridPsiSecondDerivative(x, gamma);
    if (!(next > lo && next < hi) || std::abs(residual) > 0.5 * previous) {
      next = 0.5 * (lo + hi);
    }
    previous = std::abs(residual);
    if (std::abs(next - x) <= options.coordinate_tolerance ||
        hi - lo <= options.coordinate_tolerance) {
      return next;
    }
    x = next;
  }
  return x;
}

}  // namespace

void SolverOptions::Validate() const {
  if (!(kkt_tolerance > 0.0) || !(coordinate_tolerance > 0.0)) {
    throw ConfigError("solver tolerances must be positive");
  }
  if (max_bisection_iters < 1) {
    throw ConfigError("max_bisection_iters must be at least 1");
  }
}

double HybridPsi(double x, double gamma) {
  const double entropy = x < 1.0 ? (1.0 - x) * std::log(1.0 - x) : 0.0;
  return -std::sqrt(x) + gamma * entropy;
}

double HybridPsiDerivative(double x, double gamma) {
  return -0.5 / std::sqrt(x) - gamma * std::log(1.0 - x) - gamma;
}

double HybridPsiSecondDerivative(double x, double gamma) {
  return 0.25 / (x * std::sqrt(x)) + gamma / (1.0 - x);
}

double HybridObjective(std::span<const double> x,
                       std::span<const double> losses, double eta,
                       double gamma) {
  double value = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    value += losses[i] * x[i] + HybridPsi(x[i], gamma) / eta;
  }
  return value;
}

CappedSimplexSolution CappedSimplexArgmin(std::span<const double> losses,
                                          double eta, double gamma, int k,
                                          const SolverOptions& options) {
  options.Validate();
  const int m = static_cast<int>(losses.size());
  if (k < 1 || k >= m) {
    throw ConfigError("capped simplex needs 1 <= k < m (k=" +
                      std::to_string(k) + ", m=" + std::to_string(m) + ")");
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw ConfigError("learning rate eta must be positive and finite");
  }
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw ConfigError("regularizer gamma must lie in (0, 1]");
  }
  for (double l : losses) {
    if (!std::isfinite(l)) throw InputError("non-finite loss estimate");
  }

  // Shifting every loss by a constant only moves the multiplier.
  const auto [min_it, max_it] = std::minmax_element(losses.begin(), losses.end());
  const double shift = *min_it;
  std::vector<double> shifted(m);
  for (int i = 0; i < m; ++i) shifted[i] = losses[i] - shift;
  const double spread = *max_it - shift;

  // At lambda_lo every coordinate is >= k/m, at lambda_hi every one is <= k/m.
  const double uniform = static_cast<double>(k) / m;
  const double anchor = -HybridPsiDerivative(uniform, gamma) / eta;
  double lambda_lo = anchor - spread;
  double lambda_hi = anchor;

  CappedSimplexSolution solution;
  solution.x.assign(m, uniform);
  double lambda = anchor - std::accumulate(shifted.begin(), shifted.end(), 0.0) / m;
  double previous = std::numeric_limits<double>::infinity();

  for (int iter = 1; iter <= options.max_bisection_iters; ++iter) {
    solution.outer_iterations = iter;
    double sum = 0.0;
    double slope = 0.0;  // d sum / d lambda
    for (int i = 0; i < m; ++i) {
      double& xi = solution.x[i];
      xi = InvertDerivative(-eta * (shifted[i] + lambda), gamma, xi, options);
      sum += xi;
      if (xi > kMinCoordinate && xi < kMaxCoordinate) {
        slope -= eta / HybridPsiSecondDerivative(xi, gamma);
      }
    }
    const double residual = sum - k;
    solution.sum_residual = residual;
    solution.multiplier = lambda - shift;
    if (std::abs(residual) < options.kkt_tolerance) return solution;

    if (residual > 0.0) {
      lambda_lo = lambda;
    } else {
      lambda_hi = lambda;
    }
    double next = slope < 0.0 ? lambda - residual / slope : lambda_lo;
    if (!(next > lambda_lo && next < lambda_hi) ||
        std::abs(residual) > 0.5 * previous) {
      next = 0.5 * (lambda_lo + lambda_hi);
    }
    previous = std::abs(residual);
    if (next == lambda) break;  // bracket exhausted at double precision
    lambda = next;
  }
  throw SolverError("capped simplex argmin did not meet |sum(x) - k| < " +
                        FormatDouble(options.kkt_tolerance) + " after " +
                        std::to_string(solution.outer_iterations) +
                        " iterations (residual " +
                        FormatDouble(solution.sum_residual) + ")",
                    solution.sum_residual);
}

}  // namespace cmab
