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

#ifndef CMAB_RANDOM_H_
#define CMAB_RANDOM_H_

#include <cstdint>
#include <random>

namespace cmab {

using Rng = std::mt19937_64;

// Independent sub-streams of one replication.
enum class Stream : std::uint64_t {
  kEnvironment = 1,
  kPolicy = 2,
  kInstance = 3,
};

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of replication `run` on `stream`:
//   Mix64(Mix64(Mix64(base_seed) ^ run) ^ stream)
// Every replication is reproducible on its own from (base_seed, run).
constexpr std::uint64_t ChildSeed(std::uint64_t base_seed, std::uint64_t run,
                                  Stream stream) {
  return Mix64(Mix64(Mix64(base_seed) ^ run) ^
               static_cast<std::uint64_t>(stream));
}

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace cmab

#endif  // CMAB_RANDOM_H_
