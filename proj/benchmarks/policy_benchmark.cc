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

// Per-round policy cost (select + update) and the two inner kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "cmab/data.h"
#include "cmab/depround.h"
#include "cmab/environment.h"
#include "cmab/policy.h"
#include "cmab/solvers.h"

namespace cmab {
namespace {

// Arg 0: algorithm, arg 1: m. k = m / 3.
void BM_PolicyRound(benchmark::State& state) {
  const auto algorithm = static_cast<Algorithm>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const int k = std::max(1, m / 3);
  const ProblemInstance instance(GenSyntheticMeans(m, 0.0, 0.1, 2025), k);
  PolicyParams params;
  params.num_arms = m;
  params.k = k;
  params.seed = 1;
  auto policy = MakePolicy(algorithm, params);
  Environment env(instance, 2);
  std::int64_t t = 1;
  for (auto _ : state) {
    const Action action = policy->Select(t++);
    state.PauseTiming();
    const Feedback feedback = env.Step(action);
    state.ResumeTiming();
    policy->Update(action, feedback);
  }
  state.SetLabel(std::string(ToString(algorithm)));
}
BENCHMARK(BM_PolicyRound)
    ->ArgsProduct({{static_cast<int>(Algorithm::kCmoss),
                    static_cast<int>(Algorithm::kCucb),
                    static_cast<int>(Algorithm::kExp3m),
                    static_cast<int>(Algorithm::kHybrid)},
                   {30, 100}});

void BM_DepRound(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int k = m / 3;
  // k/m, nudged up and down in pairs so the sum stays k. m is even.
  std::vector<double> p(m);
  for (int i = 0; i < m; ++i) {
    p[i] = (1.0 + (i % 2 == 0 ? 0.3 : -0.3)) * k / m;
  }
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(DepRound(p, rng));
}
BENCHMARK(BM_DepRound)->Arg(30)->Arg(300);

void BM_CappedSimplexArgmin(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<double> losses(m);
  Rng rng(5);
  for (double& l : losses) l = -1e4 * Uniform01(rng);
  const double eta = 1.0 / std::sqrt(5e4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CappedSimplexArgmin(losses, eta, 1.0, m / 3));
  }
}
BENCHMARK(BM_CappedSimplexArgmin)->Arg(30)->Arg(300);

}  // namespace
}  // namespace cmab

BENCHMARK_MAIN();
