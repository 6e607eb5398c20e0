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


#ifndef PIPEFORGE_SELECTION_RANKING_H_
#define PIPEFORGE_SELECTION_RANKING_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pipeforge/learners/dataset.h"
#include "pipeforge/learners/predictor.h"

namespace pipeforge::selection {

enum class RankingMethod { kErt, kRfe };

std::string_view RankingMethodName(RankingMethod method);
RankingMethod RankingMethodFromName(std::string_view name);

struct Provenance {
  std::string config;  // feature configuration identity, e.g. "CF2/NED"
  std::string task;
  uint64_t seed = 0;

  bool operator==(const Provenance&) const = default;
};

// Features sorted by descending score; equal scores order by name.
struct FeatureRanking {
  RankingMethod method = RankingMethod::kErt;
  std::vector<std::pair<std::string, double>> ordered;
  Provenance provenance;

  std::vector<std::string> Names() const;
  size_t size() const { return ordered.size(); }

  bool operator==(const FeatureRanking&) const = default;
};

// Sorts `scores` into a ranking. Throws RangeError on negative or
// non-finite scores.
FeatureRanking MakeRanking(RankingMethod method,
                           const std::map<std::string, double>& scores,
                           Provenance provenance = {});

// Gini importance of an extremely randomized trees fit. `params` override
// the ERT defaults.
FeatureRanking RankErt(const learners::TrainingSet& training,
                       const learners::Hyperparameters& params, uint64_t seed,
                       int jobs = 1);

// Task-level ranking: ERT importances of every component's training set
// averaged feature-wise. Components whose fit has no split are skipped;
// if all are skipped the DegenerateError propagates. All sets must share
// feature names.
FeatureRanking RankErtAveraged(const std::vector<learners::TrainingSet>& sets,
                               const learners::Hyperparameters& params,
                               uint64_t seed, int jobs = 1);

// Recursive feature elimination, one feature per round. Importance comes
// from Gini importance for tree kinds and |weight| for logistic
// regression; an estimator without usable importance (no split, constant
// labels) scores every feature 0. The least important feature is removed,
// the lexicographically largest name among ties. A feature removed in
// round s (0-based) scores s; survivors score E + importance, E being the
// number of eliminated features.
FeatureRanking Rfe(const learners::TrainingSet& training,
                   learners::ModelKind estimator, size_t target_n,
                   uint64_t seed, const learners::Hyperparameters& hyper = {},
                   int jobs = 1);

// First n names of the ranking; RangeError unless 1 <= n <= size.
std::vector<std::string> SelectTopN(const FeatureRanking& ranking, size_t n);

// CSV with header rank,feature,score,method,config,task,seed; rank is
// 1-based.
void WriteRankingCsv(std::ostream& out, const std::vector<FeatureRanking>& rankings);

}  // namespace pipeforge::selection

#endif  // PIPEFORGE_SELECTION_RANKING_H_
