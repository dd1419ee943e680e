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

#ifndef CMAB_SOLVERS_H_
#define CMAB_SOLVERS_H_

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "cmab/errors.h"

namespace cmab {

struct SolverOptions {
  double kkt_tolerance = 1e-10;  // on |sum(x) - k|
  int max_bisection_iters = 200;
  double coordinate_tolerance = 1e-12;

  // Throws ConfigError unless every tolerance is positive.
  void Validate() const;
};

// Root of a monotone (increasing or decreasing) scalar function on [lo, hi].
// Returns x with |f(x)| <= tol or a bracket narrower than tol. Throws
// InputError if f(lo) and f(hi) have the same sign and neither is within tol
// of zero.
template <typename F>
double Bisect(F&& f, double lo, double hi, double tol,
              int max_iters = SolverOptions{}.max_bisection_iters) {
  double f_lo = f(lo);
  if (std::abs(f_lo) <= tol) return lo;
  const double f_hi = f(hi);
  if (std::abs(f_hi) <= tol) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw InputError("bisect: no sign change on [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "]");
  }
  for (int iter = 0; iter < max_iters; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (std::abs(f_mid) <= tol || hi - lo <= tol) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Per-coordinate hybrid regularizer
//   psi(x) = -sqrt(x) + gamma * (1 - x) * ln(1 - x),   x in [0, 1],
// strictly convex with psi'(0+) = -inf and psi'(1-) = +inf for gamma > 0.
double HybridPsi(double x, double gamma);
double HybridPsiDerivative(double x, double gamma);
double HybridPsiSecondDerivative(double x, double gamma);

// sum_i losses_i * x_i + psi(x_i) / eta
double HybridObjective(std::span<const double> x,
                       std::span<const double> losses, double eta,
                       double gamma);

struct CappedSimplexSolution {
  std::vector<double> x;
  double multiplier = 0.0;    // lambda on the constraint sum(x) = k
  double sum_residual = 0.0;  // sum(x) - k
  int outer_iterations = 0;
};

// argmin_x <x, losses> + psi(x) / eta over {x in [0,1]^m : sum(x) = k}.
//
// The sum constraint is dualized. For a fixed multiplier lambda every
// coordinate solves psi'(x_i) = -eta * (losses_i + lambda), a monotone scalar
// equation, and sum_i x_i(lambda) is decreasing in lambda. Both levels use
// Newton steps safeguarded by a shrinking bisection bracket. Coordinates are
// kept in [1e-12, 1 - 1e-12].
//
// Requires 1 <= k < m, eta > 0, gamma in (0, 1] and finite losses; throws
// ConfigError/InputError otherwise and SolverError when the sum constraint is
// not met within max_bisection_iters outer steps.
CappedSimplexSolution CappedSimplexArgmin(std::span<const double> losses,
                                          double eta, double gamma, int k,
                                          const SolverOptions& options = {});

}  // namespace cmab

#endif  // CMAB_SOLVERS_H_
