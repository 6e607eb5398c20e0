// Copyright 2026 The Pipeforge Authors.
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


#include "pipeforge/selection/ranking.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <spdlog/spdlog.h>

#include "pipeforge/core/csv.h"
#include "pipeforge/core/errors.h"
#include "pipeforge/core/performance_matrix.h"
#include "pipeforge/core/rng.h"
#include "pipeforge/learners/gini.h"

namespace pipeforge::selection {
namespace {

using learners::Hyperparameters;
using learners::ModelKind;
using learners::TrainingSet;

// Importance per column of `training`, zeros when undefined.
std::vector<double> EstimatorImportance(const learners::Predictor& p) {
  const size_t n = p.feature_names().size();
  if (const auto* lr = p.logistic()) {
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = std::abs(lr->weights[i]);
    return out;
  }
  if (p.is_constant()) return std::vector<double>(n, 0.0);
  if (!learners::IsTreeKind(p.kind())) {
    throw ConfigError("RFE needs a tree kind or LogisticRegression, got " +
                      std::string(learners::ModelKindName(p.kind())));
  }
  try {
    const auto importance = learners::GiniImportance(p);
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = importance.at(p.feature_names()[i]);
    return out;
  } catch (const DegenerateError&) {
    return std::vector<double>(n, 0.0);
  }
}

}  // namespace

std::string_view RankingMethodName(RankingMethod method) {
  return method == RankingMethod::kErt ? "ERT" : "RFE";
}

RankingMethod RankingMethodFromName(std::string_view name) {
  if (name == "ERT" || name == "ert") return RankingMethod::kErt;
  if (name == "RFE" || name == "rfe") return RankingMethod::kRfe;
  throw ParseError("unknown selection method '" + std::string(name) +
                   "' (valid: ERT, RFE)");
}

std::vector<std::string> FeatureRanking::Names() const {
  std::vector<std::string> out;
  out.reserve(ordered.size());
  for (const auto& [name, score] : ordered) out.push_back(name);
  return out;
}

FeatureRanking MakeRanking(RankingMethod method,
                           const std::map<std::string, double>& scores,
                           Provenance provenance) {
  FeatureRanking r;
  r.method = method;
  r.provenance = std::move(provenance);
  for (const auto& [name, score] : scores) {
    if (!std::isfinite(score) || score < 0.0) {
      throw RangeError("ranking score of '" + name + "' must be finite and >= 0");
    }
    r.ordered.emplace_back(name, score);
  }
  std::stable_sort(r.ordered.begin(), r.ordered.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return r;
}

FeatureRanking RankErt(const TrainingSet& training, const Hyperparameters& params,
                       uint64_t seed, int jobs) {
  const auto model = learners::Train(ModelKind::kExtraTrees, training, params, seed, jobs);
  return MakeRanking(RankingMethod::kErt, learners::GiniImportance(model),
                     {.config = "", .task = "", .seed = seed});
}

FeatureRanking RankErtAveraged(const std::vector<TrainingSet>& sets,
                               const Hyperparameters& params, uint64_t seed,
                               int jobs) {
  if (sets.empty()) throw RangeError("no training sets to rank features on");
  const auto& names = sets.front().feature_names;
  std::map<std::string, double> sum;
  for (const auto& n : names) sum[n] = 0.0;
  size_t used = 0;
  std::string last_error;
  for (size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].feature_names != names) {
      throw DimensionError("training sets disagree on feature names");
    }
    if (sets[i].size() == 0) continue;
    try {
      const auto model = learners::Train(ModelKind::kExtraTrees, sets[i], params,
                                         DeriveSeed(seed, i), jobs);
      for (const auto& [name, v] : learners::GiniImportance(model)) sum[name] += v;
      ++used;
    } catch (const DegenerateError& e) {
      last_error = e.what();
    }
  }
  if (used == 0) {
    throw DegenerateError("no component yields a feature ranking: " + last_error);
  }
  for (auto& [name, v] : sum) v /= static_cast<double>(used);
  return MakeRanking(RankingMethod::kErt, sum, {.config = "", .task = "", .seed = seed});
}

FeatureRanking Rfe(const TrainingSet& training, ModelKind estimator,
                   size_t target_n, uint64_t seed, const Hyperparameters& hyper,
                   int jobs) {
  const size_t p = training.feature_names.size();
  if (target_n < 1 || target_n > p) {
    throw RangeError("RFE target_n must lie in [1, " + std::to_string(p) + "], got " +
                     std::to_string(target_n));
  }
  std::vector<std::string> remaining = training.feature_names;
  std::map<std::string, double> scores;
  size_t step = 0;
  while (true) {
    const TrainingSet subset = training.SelectFeatures(remaining);
    const auto model = learners::Train(estimator, subset, hyper, DeriveSeed(seed, step), jobs);
    const std::vector<double> importance = EstimatorImportance(model);
    if (remaining.size() == target_n) {
      const double offset = static_cast<double>(step);
      for (size_t i = 0; i < remaining.size(); ++i) {
        scores[remaining[i]] = offset + importance[i];
      }
      break;
    }
    size_t worst = 0;
    for (size_t i = 1; i < remaining.size(); ++i) {
      if (importance[i] < importance[worst] ||
          (importance[i] == importance[worst] && remaining[i] > remaining[worst])) {
        worst = i;
      }
    }
    spdlog::debug("RFE round {}: dropping {}", step, remaining[worst]);
    scores[remaining[worst]] = static_cast<double>(step);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(worst));
    ++step;
  }
  return MakeRanking(RankingMethod::kRfe, scores, {.config = "", .task = "", .seed = seed});
}

std::vector<std::string> SelectTopN(const FeatureRanking& ranking, size_t n) {
  if (n < 1 || n > ranking.size()) {
    throw RangeError("top-N must lie in [1, " + std::to_string(ranking.size()) +
                     "], got " + std::to_string(n));
  }
  std::vector<std::string> names = ranking.Names();
  names.resize(n);
  return names;
}

void WriteRankingCsv(std::ostream& out, const std::vector<FeatureRanking>& rankings) {
  csv::WriteRow(out, {"rank", "feature", "score", "method", "config", "task", "seed"});
  for (const auto& r : rankings) {
    for (size_t i = 0; i < r.ordered.size(); ++i) {
      csv::WriteRow(out, {std::to_string(i + 1), r.ordered[i].first,
                          FormatScore(r.ordered[i].second),
                          std::string(RankingMethodName(r.method)), r.provenance.config,
                          r.provenance.task, std::to_string(r.provenance.seed)});
    }
  }
}

}  // namespace pipeforge::selection
