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

#include "cmab/data.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "cmab/errors.h"
#include "cmab/random.h"
#include "cmab/text.h"

namespace cmab {

std::vector<double> GenSyntheticMeans(int num_arms, double lo, double hi,
                                      std::uint64_t seed) {
  if (num_arms < 1) throw InputError("need at least one arm");
  if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
    throw InputError("uniform mean range needs 0 <= lo < hi <= 1 (lo=" +
                     FormatDouble(lo) + ", hi=" + FormatDouble(hi) + ")");
  }
  Rng rng(seed);
  std::vector<double> means(num_arms);
  for (double& mean : means) mean = lo + (hi - lo) * Uniform01(rng);
  return means;
}

VectorSet ReadVectors(std::istream& in, std::string_view source) {
  VectorSet rows;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    std::istringstream fields(line);
    std::vector<double> row;
    std::string token;
    while (fields >> token) {
      row.push_back(ParseDouble(
          token, std::string(source) + ":" + std::to_string(line_number)));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError(std::string(source) + ":" +
                       std::to_string(line_number) + ": dimension " +
                       std::to_string(row.size()) + " differs from " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

VectorSet ReadVectorFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open feature file '" + path + "'");
  return ReadVectors(in, path);
}

int NormalizeRows(VectorSet& rows) {
  int rescaled = 0;
  for (auto& row : rows) {
    double norm_sq = 0.0;
    for (double v : row) norm_sq += v * v;
    if (norm_sq == 0.0) throw InputError("cannot normalize a zero vector");
    const double norm = std::sqrt(norm_sq);
    if (std::abs(norm - 1.0) <= 1e-9) continue;
    for (double& v : row) v /= norm;
    ++rescaled;
  }
  return rescaled;
}

std::vector<double> AffinityScores(const VectorSet& users,
                                   const VectorSet& items) {
  std::vector<double> scores;
  scores.reserve(users.size() * items.size());
  for (const auto& u : users) {
    for (const auto& a : items) {
      if (u.size() != a.size()) {
        throw InputError("user dimension " + std::to_string(u.size()) +
                         " differs from item dimension " +
                         std::to_string(a.size()));
      }
      double dot = 0.0;
      for (std::size_t d = 0; d < u.size(); ++d) dot += u[d] * a[d];
      scores.push_back(dot);
    }
  }
  return scores;
}

std::string_view ToString(Regime regime) {
  return regime == Regime::kLow ? "low" : "high";
}

Regime ParseRegime(std::string_view name) {
  if (name == "low") return Regime::kLow;
  if (name == "high") return Regime::kHigh;
  throw InputError("unknown regime '" + std::string(name) +
                   "' (expected low or high)");
}

std::vector<double> RescaleScores(std::span<const double> scores,
                                  Regime regime) {
  if (scores.empty()) throw InputError("no scores to rescale");
  const auto [min_it, max_it] = std::minmax_element(scores.begin(), scores.end());
  const double lo = *min_it;
  const double range = *max_it - lo;
  if (!(range > 0.0)) throw InputError("all scores are equal; cannot rescale");
  const double offset = regime == Regime::kLow ? 0.0 : 0.5;
  std::vector<double> out(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    out[i] = offset + 0.1 * ((scores[i] - lo) / range);
  }
  return out;
}

std::vector<double> SampleArms(std::span<const double> scores, int num_arms,
                               std::uint64_t seed) {
  if (num_arms < 0 || static_cast<std::size_t>(num_arms) > scores.size()) {
    throw InputError("cannot sample " + std::to_string(num_arms) +
                     " arms from " + std::to_string(scores.size()) + " scores");
  }
  Rng rng(seed);
  std::vector<double> out;
  out.reserve(num_arms);
  std::sample(scores.begin(), scores.end(), std::back_inserter(out), num_arms,
              rng);
  return out;
}

}  // namespace cmab
