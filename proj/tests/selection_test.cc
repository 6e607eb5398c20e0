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


#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "pipeforge/core/errors.h"
#include "pipeforge/core/rng.h"
#include "pipeforge/selection/ranking.h"

namespace pipeforge::selection {
namespace {

learners::TrainingSet Planted(uint64_t seed) {
  Rng rng(seed);
  learners::TrainingSet set;
  for (int j = 0; j < 6; ++j) set.feature_names.push_back("f" + std::to_string(j));
  for (int i = 0; i < 150; ++i) {
    std::vector<double> x(6);
    for (double& v : x) v = rng.Uniform();
    set.x.AppendRow(x);
    set.y.push_back(x[2] > 0.5 ? 1.0 : 0.0);
  }
  return set;
}

TEST(RankingTest, SortsDescendingWithNameTieBreak) {
  const auto r = MakeRanking(RankingMethod::kErt, {{"b", 0.5}, {"a", 0.5}, {"c", 0.9}});
  EXPECT_EQ(r.Names(), (std::vector<std::string>{"c", "a", "b"}));
  EXPECT_THROW(MakeRanking(RankingMethod::kErt, {{"a", -1}}), RangeError);
}

TEST(RankingTest, SelectTopNBounds) {
  const auto r = MakeRanking(RankingMethod::kRfe, {{"a", 1}, {"b", 2}});
  EXPECT_EQ(SelectTopN(r, 1), (std::vector<std::string>{"b"}));
  EXPECT_THROW(SelectTopN(r, 0), RangeError);
  EXPECT_THROW(SelectTopN(r, 3), RangeError);
}

TEST(RankingTest, ErtFindsPlantedFeature) {
  const auto r = RankErt(Planted(1), {{"n_trees", 50}}, 3);
  EXPECT_EQ(r.Names().front(), "f2");
  EXPECT_EQ(r.size(), 6u);
  EXPECT_EQ(RankErt(Planted(1), {{"n_trees", 50}}, 3), r);
}

TEST(RankingTest, RfeScoresFollowEliminationOrder) {
  const auto r = Rfe(Planted(2), learners::ModelKind::kRandomForest, 2, 5, {{"n_trees", 20}});
  ASSERT_EQ(r.size(), 6u);
  EXPECT_EQ(r.Names().front(), "f2");
  // Four eliminated features score 0..3; survivors score 4 + importance.
  std::multiset<double> eliminated;
  for (const auto& [name, score] : r.ordered) {
    if (score < 4) eliminated.insert(score);
  }
  EXPECT_EQ(eliminated, (std::multiset<double>{0, 1, 2, 3}));
  EXPECT_GE(r.ordered[0].second, 4.0);
  EXPECT_GE(r.ordered[1].second, 4.0);
}

TEST(RankingTest, RfeWithLogisticUsesWeights) {
  const auto r =
      Rfe(Planted(3), learners::ModelKind::kLogisticRegression, 1, 5);
  EXPECT_EQ(r.Names().front(), "f2");
  EXPECT_THROW(Rfe(Planted(3), learners::ModelKind::kGaussianNaiveBayes, 1, 5), ConfigError);
}

TEST(RankingTest, AveragedRankingChecksNames) {
  auto a = Planted(4);
  auto b = Planted(5);
  const auto r = RankErtAveraged({a, b}, {{"n_trees", 20}}, 7);
  EXPECT_EQ(r.Names().front(), "f2");
  b.feature_names[0] = "other";
  EXPECT_THROW(RankErtAveraged({a, b}, {{"n_trees", 20}}, 7), DimensionError);
}

TEST(RankingTest, CsvLayout) {
  auto r = MakeRanking(RankingMethod::kErt, {{"x", 0.25}, {"y", 0.75}}, {"CF2/NED", "NED", 42});
  std::ostringstream out;
  WriteRankingCsv(out, {r});
  EXPECT_EQ(out.str(),
            "rank,feature,score,method,config,task,seed\n"
            "1,y,0.7500,ERT,CF2/NED,NED,42\n"
            "2,x,0.2500,ERT,CF2/NED,NED,42\n");
}

}  // namespace
}  // namespace pipeforge::selection
