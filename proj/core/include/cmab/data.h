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

// Arm-mean construction: synthetic uniform regimes and affinity scores between
// user and item feature vectors rescaled into a click-probability regime.

#ifndef CMAB_DATA_H_
#define CMAB_DATA_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cmab {

// m independent draws from U(lo, hi). Throws InputError unless
// 0 <= lo < hi <= 1.
std::vector<double> GenSyntheticMeans(int num_arms, double lo, double hi,
                                      std::uint64_t seed);

using VectorSet = std::vector<std::vector<double>>;

// One vector per non-blank line, whitespace-separated reals. All rows must
// have the same dimension.
VectorSet ReadVectors(std::istream& in, std::string_view source = "<stream>");
VectorSet ReadVectorFile(const std::string& path);

// Rescales every row to unit l2 norm and returns how many rows needed it.
// Throws InputError on an all-zero row.
int NormalizeRows(VectorSet& rows);

// Row-major |users| x |items| matrix of dot products. Throws InputError on a
// dimension mismatch.
std::vector<double> AffinityScores(const VectorSet& users,
                                   const VectorSet& items);

enum class Regime { kLow, kHigh };

std::string_view ToString(Regime regime);
Regime ParseRegime(std::string_view name);

// Min-max normalizes the scores and maps them to [0, 0.1] (low) or
// [0.5, 0.6] (high). Throws InputError when all scores are equal.
std::vector<double> RescaleScores(std::span<const double> scores,
                                  Regime regime);

// m values drawn without replacement from `scores`. Throws InputError when
// fewer than m are available.
std::vector<double> SampleArms(std::span<const double> scores, int num_arms,
                               std::uint64_t seed);

}  // namespace cmab

#endif  // CMAB_DATA_H_
