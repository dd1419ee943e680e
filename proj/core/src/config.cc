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

#include "cmab/config.h"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "cmab/errors.h"
#include "cmab/text.h"

namespace cmab {
namespace {

int ParseCount(std::string_view value, std::string_view key) {
  const std::int64_t n = ParseInt(value, key);
  if (n < std::numeric_limits<int>::min() ||
      n > std::numeric_limits<int>::max()) {
    throw InputError(std::string(key) + ": value out of range");
  }
  return static_cast<int>(n);
}

// "name(a,b,...)" -> name and the argument list.
std::pair<std::string_view, std::vector<std::string_view>> SplitCall(
    std::string_view text) {
  text = Trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw InputError("means: expected uniform(lo,hi) or "
                     "affinity(users,items,regime), got '" +
                     std::string(text) + "'");
  }
  return {Trim(text.substr(0, open)),
          Split(text.substr(open + 1, text.size() - open - 2), ',')};
}

}  // namespace

std::string ToString(const MeanSource& source) {
  if (source.kind == MeanSource::Kind::kUniform) {
    return "uniform(" + FormatDouble(source.lo) + "," +
           FormatDouble(source.hi) + ")";
  }
  return "affinity(" + source.users_path + "," + source.items_path + "," +
         std::string(ToString(source.regime)) + ")";
}

MeanSource ParseMeanSource(std::string_view text) {
  const auto [name, args] = SplitCall(text);
  MeanSource source;
  if (name == "uniform" && args.size() == 2) {
    source.kind = MeanSource::Kind::kUniform;
    source.lo = ParseDouble(args[0], "means lower bound");
    source.hi = ParseDouble(args[1], "means upper bound");
    return source;
  }
  if (name == "affinity" && args.size() == 3) {
    source.kind = MeanSource::Kind::kAffinity;
    source.users_path = std::string(args[0]);
    source.items_path = std::string(args[1]);
    source.regime = ParseRegime(args[2]);
    return source;
  }
  throw InputError("means: expected uniform(lo,hi) or "
                   "affinity(users,items,regime), got '" +
                   std::string(text) + "'");
}

void ExperimentConfig::Validate() const {
  if (m < 1) throw ConfigError("m must be positive (m=" + std::to_string(m) + ")");
  if (k < 1) throw ConfigError("k must be positive (k=" + std::to_string(k) + ")");
  if (k > m) {
    throw ConfigError("k (=" + std::to_string(k) + ") must not exceed m (=" +
                      std::to_string(m) + ")");
  }
  if (horizon < 1) throw ConfigError("horizon must be at least 1");
  if (runs < 1) throw ConfigError("runs must be at least 1");
  if (threads < 0) throw ConfigError("threads must be non-negative");
  if (algorithm == Algorithm::kCmoss && !(delta > 0.0 && delta < 1.0)) {
    throw ConfigError("delta must lie in (0, 1) for cmoss (delta=" +
                      FormatDouble(delta) + ")");
  }
  if (algorithm == Algorithm::kExp3m && !(gamma > 0.0 && gamma <= 1.0)) {
    throw ConfigError("gamma must lie in (0, 1] for exp3m (gamma=" +
                      FormatDouble(gamma) + ")");
  }
  if (algorithm == Algorithm::kHybrid && k >= m) {
    throw ConfigError("hybrid needs k (=" + std::to_string(k) +
                      ") below m (=" + std::to_string(m) + ")");
  }
  if ((algorithm == Algorithm::kExp3m || algorithm == Algorithm::kHybrid) &&
      IsCascade(feedback)) {
    throw ConfigError("feedback " + std::string(ToString(feedback)) +
                      " is not supported by algorithm " +
                      std::string(ToString(algorithm)));
  }
  if (means.kind == MeanSource::Kind::kUniform &&
      !(means.lo >= 0.0 && means.lo < means.hi && means.hi <= 1.0)) {
    throw ConfigError("means: uniform range needs 0 <= lo < hi <= 1");
  }
  if (means.kind == MeanSource::Kind::kAffinity &&
      (means.users_path.empty() || means.items_path.empty())) {
    throw ConfigError("means: affinity source needs both feature files");
  }
  if (out.empty()) throw ConfigError("out must not be empty");
}

const std::vector<std::string_view>& ConfigKeys() {
  static const std::vector<std::string_view> keys = {
      "algorithm", "m",     "k",     "horizon",       "delta",
      "gamma",     "feedback", "order", "no_click", "means", "instance_seed",
      "seed",      "runs",  "threads", "out"};
  return keys;
}

void SetConfigValue(ExperimentConfig& config, std::string_view key,
                    std::string_view value) {
  value = Trim(value);
  try {
    if (key == "algorithm") {
      config.algorithm = ParseAlgorithm(value);
    } else if (key == "m") {
      config.m = ParseCount(value, key);
    } else if (key == "k") {
      config.k = ParseCount(value, key);
    } else if (key == "horizon") {
      config.horizon = ParseInt(value, key);
    } else if (key == "delta") {
      config.delta = ParseDouble(value, key);
    } else if (key == "gamma") {
      config.gamma = ParseDouble(value, key);
    } else if (key == "feedback") {
      config.feedback = ParseFeedbackMode(value);
    } else if (key == "order") {
      config.order = ParseExaminationOrder(value);
    } else if (key == "no_click") {
      config.no_click = ParseNoClickRule(value);
    } else if (key == "means") {
      config.means = ParseMeanSource(value);
    } else if (key == "instance_seed") {
      config.instance_seed = ParseUint(value, key);
    } else if (key == "seed") {
      config.seed = ParseUint(value, key);
    } else if (key == "runs") {
      config.runs = ParseCount(value, key);
    } else if (key == "threads") {
      config.threads = ParseCount(value, key);
    } else if (key == "out") {
      config.out = std::string(value);
    } else {
      throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
  } catch (const InputError& e) {
    throw ConfigError("config key '" + std::string(key) + "': " + e.what());
  }
}

ExperimentConfig ParseConfig(std::string_view text) {
  ExperimentConfig config;
  std::set<std::string, std::less<>> seen;
  int line_number = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = Trim(line.substr(0, hash));
    }
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_number) +
                        ": expected 'key = value'");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError("config key '" + std::string(key) + "' set twice");
    }
    SetConfigValue(config, key, line.substr(eq + 1));
  }
  config.Validate();
  return config;
}

ExperimentConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfig(text.str());
}

std::string SerializeConfig(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "algorithm = " << ToString(c.algorithm) << '\n'
      << "m = " << c.m << '\n'
      << "k = " << c.k << '\n'
      << "horizon = " << c.horizon << '\n'
      << "delta = " << FormatDouble(c.delta) << '\n'
      << "gamma = " << FormatDouble(c.gamma) << '\n'
      << "feedback = " << ToString(c.feedback) << '\n'
      << "order = " << ToString(c.order) << '\n'
      << "no_click = " << ToString(c.no_click) << '\n'
      << "means = " << ToString(c.means) << '\n'
      << "instance_seed = " << c.instance_seed << '\n'
      << "seed = " << c.seed << '\n'
      << "runs = " << c.runs << '\n'
      << "threads = " << c.threads << '\n'
      << "out = " << c.out << '\n';
  return out.str();
}

ProblemInstance BuildInstance(const ExperimentConfig& config,
                              std::vector<std::string>* warnings) {
  std::vector<double> means;
  if (config.means.kind == MeanSource::Kind::kUniform) {
    means = GenSyntheticMeans(config.m, config.means.lo, config.means.hi,
                              config.instance_seed);
  } else {
    VectorSet users = ReadVectorFile(config.means.users_path);
    VectorSet items = ReadVectorFile(config.means.items_path);
    for (auto* set : {&users, &items}) {
      const int rescaled = NormalizeRows(*set);
      if (rescaled > 0 && warnings != nullptr) {
        warnings->push_back(
            std::to_string(rescaled) + " non-unit vectors in '" +
            (set == &users ? config.means.users_path : config.means.items_path) +
            "' were normalized");
      }
    }
    const auto scores =
        RescaleScores(AffinityScores(users, items), config.means.regime);
    means = SampleArms(scores, config.m, config.instance_seed);
  }
  return ProblemInstance(std::move(means), config.k, config.feedback,
                         config.order, config.no_click);
}

}  // namespace cmab
