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


#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "pipeforge/core/csv.h"
#include "pipeforge/core/errors.h"
#include "pipeforge/core/rng.h"
#include "pipeforge/learners/gini.h"
#include "pipeforge/learners/kfold.h"
#include "pipeforge/learners/logistic.h"
#include "pipeforge/learners/naive_bayes.h"
#include "pipeforge/learners/predictor.h"
#include "pipeforge/learners/tree.h"

namespace pipeforge::learners {
namespace {

TrainingSet LoadFixture() {
  std::ifstream in(std::string(PIPEFORGE_TEST_DATA_DIR) + "/gini_fixture.csv");
  std::vector<std::string> row;
  csv::ReadRow(in, &row);
  TrainingSet set;
  set.feature_names = row;
  set.feature_names.pop_back();
  while (csv::ReadRow(in, &row)) {
    std::vector<double> x;
    for (size_t j = 0; j + 1 < row.size(); ++j) x.push_back(std::stod(row[j]));
    set.x.AppendRow(x);
    set.y.push_back(std::stod(row.back()));
  }
  return set;
}

// Independent exhaustive CART: strict improvement, features in order,
// midpoints between distinct sorted values. Returns per-feature
// weighted Gini decrease over the root weight.
void OracleGrow(const TrainingSet& s, const std::vector<size_t>& rows,
                std::vector<double>* decrease, double root_weight) {
  auto gini = [&](const std::vector<size_t>& r) {
    if (r.empty()) return 0.0;
    double pos = 0;
    for (size_t i : r) pos += s.y[i];
    const double p = pos / r.size();
    return 2 * p * (1 - p);
  };
  const double parent = gini(rows) * rows.size();
  if (parent == 0.0) return;
  double best = -1;
  size_t best_f = 0;
  double best_t = 0;
  for (size_t f = 0; f < s.feature_names.size(); ++f) {
    std::set<double> values;
    for (size_t i : rows) values.insert(s.x.at(i, f));
    for (auto it = values.begin(); std::next(it) != values.end(); ++it) {
      const double t = (*it + *std::next(it)) / 2;
      std::vector<size_t> l, r;
      for (size_t i : rows) (s.x.at(i, f) <= t ? l : r).push_back(i);
      const double d = parent - gini(l) * l.size() - gini(r) * r.size();
      if (d > best) {
        best = d;
        best_f = f;
        best_t = t;
      }
    }
  }
  if (best < 0) return;
  (*decrease)[best_f] += best / root_weight;
  std::vector<size_t> l, r;
  for (size_t i : rows) (s.x.at(i, best_f) <= best_t ? l : r).push_back(i);
  OracleGrow(s, l, decrease, root_weight);
  OracleGrow(s, r, decrease, root_weight);
}

TEST(GiniTest, FixtureMatchesExhaustiveOracle) {
  const TrainingSet set = LoadFixture();
  ASSERT_EQ(set.size(), 8u);
  std::vector<size_t> all(set.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<double> oracle(3, 0.0);
  OracleGrow(set, all, &oracle, 8.0);
  const auto model =
      Train(ModelKind::kDecisionTree, set, {{"binarize", 1}, {"min_samples_leaf", 1}}, 1);
  const auto raw = TreeImpurityDecrease(model.ensemble()->trees.front(), 3);
  for (size_t j = 0; j < 3; ++j) EXPECT_NEAR(raw[j], oracle[j], 1e-12);
  const auto imp = GiniImportance(model);
  const double total = oracle[0] + oracle[1] + oracle[2];
  EXPECT_NEAR(imp.at("x0"), oracle[0] / total, 1e-12);
  EXPECT_NEAR(imp.at("x1"), oracle[1] / total, 1e-12);
  EXPECT_NEAR(imp.at("x2"), oracle[2] / total, 1e-12);
}

TEST(GiniTest, RejectsNonTreeAndSplitlessModels) {
  TrainingSet set = LoadFixture();
  const auto lr = Train(ModelKind::kLogisticRegression, set, {}, 1);
  EXPECT_THROW(GiniImportance(lr), ConfigError);
  std::fill(set.y.begin(), set.y.end(), 0.0);
  const auto dt = Train(ModelKind::kDecisionTree, set, {}, 1);
  EXPECT_THROW(GiniImportance(dt), DegenerateError);
}

TEST(TreeTest, LearnsXorThroughZeroGainSplit) {
  TrainingSet set;
  set.feature_names = {"a", "b"};
  for (int rep = 0; rep < 3; ++rep) {
    for (double a : {0.0, 1.0}) {
      for (double b : {0.0, 1.0}) {
        set.x.AppendRow(std::vector<double>{a, b});
        set.y.push_back(a != b ? 1.0 : 0.0);
      }
    }
  }
  const auto model = Train(ModelKind::kDecisionTree, set, {{"min_samples_leaf", 1}}, 3);
  for (size_t i = 0; i < set.size(); ++i) EXPECT_EQ(model.ScoreRow(set.x.row(i)), set.y[i]);
}

TrainingSet RandomSet(uint64_t seed, size_t n = 120, size_t d = 5) {
  Rng rng(seed);
  TrainingSet set;
  for (size_t j = 0; j < d; ++j) set.feature_names.push_back("f" + std::to_string(j));
  for (size_t i = 0; i < n; ++i) {
    std::vector<double> x(d);
    for (double& v : x) v = rng.Uniform(-3, 3);
    set.x.AppendRow(x);
    set.y.push_back(x[0] + 0.5 * x[1] > 0 ? std::min(1.0, 0.6 + 0.1 * rng.Uniform())
                                           : 0.3 * rng.Uniform());
  }
  return set;
}

TEST(PredictorTest, OneTreeForestEqualsDecisionTree) {
  const auto set = RandomSet(11);
  const auto dt = Train(ModelKind::kDecisionTree, set, {}, 5);
  const auto rf = Train(ModelKind::kRandomForest, set,
                        {{"n_trees", 1}, {"bootstrap", 0}, {"max_features", 5}}, 5);
  EXPECT_EQ(dt.ensemble()->trees.front(), rf.ensemble()->trees.front());
}

TEST(PredictorTest, ScoresStayInUnitInterval) {
  const auto set = RandomSet(12);
  for (auto kind : {ModelKind::kLogisticRegression, ModelKind::kDecisionTree,
                    ModelKind::kRandomForest, ModelKind::kExtraTrees,
                    ModelKind::kGradientBoosting, ModelKind::kGaussianNaiveBayes}) {
    Hyperparameters h;
    if (IsTreeKind(kind) && kind != ModelKind::kDecisionTree) h["n_trees"] = 10;
    const auto p = Train(kind, set, h, 9);
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
      std::vector<double> row(5);
      for (double& v : row) v = rng.Uniform(-10, 10);
      const double s = p.ScoreRow(row);
      ASSERT_GE(s, 0.0) << ModelKindName(kind);
      ASSERT_LE(s, 1.0) << ModelKindName(kind);
    }
  }
}

TEST(PredictorTest, JsonRoundTripPreservesScores) {
  const auto set = RandomSet(13);
  for (auto kind : {ModelKind::kLogisticRegression, ModelKind::kRandomForest,
                    ModelKind::kGradientBoosting, ModelKind::kGaussianNaiveBayes}) {
    Hyperparameters h;
    if (IsTreeKind(kind)) h["n_trees"] = 5;
    const auto p = Train(kind, set, h, 4);
    const auto back = Predictor::FromJson(nlohmann::json::parse(p.ToJson().dump()));
    EXPECT_EQ(back, p) << ModelKindName(kind);
    for (size_t i = 0; i < set.size(); ++i) {
      ASSERT_EQ(back.ScoreRow(set.x.row(i)), p.ScoreRow(set.x.row(i)));
    }
  }
}

TEST(PredictorTest, FromJsonFailsClosed) {
  const auto p = Train(ModelKind::kLogisticRegression, RandomSet(14), {}, 4);
  auto j = p.ToJson();
  j["kind"] = "Perceptron";
  EXPECT_THROW(Predictor::FromJson(j), ParseError);
  j = p.ToJson();
  j["parameters"]["model"]["type"] = "svm";
  EXPECT_THROW(Predictor::FromJson(j), ParseError);
}

TEST(PredictorTest, DeterministicAcrossJobCounts) {
  const auto set = RandomSet(15);
  const auto a = Train(ModelKind::kRandomForest, set, {{"n_trees", 20}}, 8, 1);
  const auto b = Train(ModelKind::kRandomForest, set, {{"n_trees", 20}}, 8, 4);
  EXPECT_EQ(a, b);
}

TEST(PredictorTest, ConstantLabelsFallBackToPrior) {
  TrainingSet set = RandomSet(16);
  std::fill(set.y.begin(), set.y.end(), 1.0);
  const auto p = Train(ModelKind::kLogisticRegression, set, {}, 1);
  EXPECT_TRUE(p.is_constant());
  EXPECT_EQ(p.ScoreRow(set.x.row(0)), 1.0);
}

TEST(PredictorTest, InputValidation) {
  const auto set = RandomSet(17);
  EXPECT_THROW(Train(ModelKind::kRandomForest, set, {{"depth", 3}}, 1), ConfigError);
  EXPECT_THROW(Train(ModelKind::kRandomForest, TrainingSet{}, {}, 1), RangeError);
  TrainingSet bad = set;
  bad.y[0] = 1.5;
  EXPECT_THROW(Train(ModelKind::kRandomForest, bad, {}, 1), ValidationError);
  const auto p = Train(ModelKind::kDecisionTree, set, {}, 1);
  features::FeatureVector x{"", {"f0"}, {1.0}};
  EXPECT_THROW(p.Score(x), DimensionError);
  EXPECT_THROW(ModelKindFromName("SVM"), ParseError);
  EXPECT_EQ(ModelKindFromName("ERT"), ModelKind::kExtraTrees);
}

TEST(LogisticTest, GradientMatchesFiniteDifferences) {
  Rng rng(21);
  DenseMatrix x(15, 3);
  std::vector<double> y(15);
  for (size_t i = 0; i < 15; ++i) {
    for (size_t j = 0; j < 3; ++j) x.at(i, j) = rng.Normal();
    y[i] = rng.Bernoulli(0.4);
  }
  const std::vector<double> w = {0.3, -0.7, 1.1};
  std::vector<double> gw(3);
  double gb = 0;
  LogisticGradient(x, y, w, 0.2, 0.05, gw, &gb);
  const double h = 1e-6;
  for (size_t j = 0; j < 3; ++j) {
    auto wp = w, wm = w;
    wp[j] += h;
    wm[j] -= h;
    const double num =
        (LogisticLoss(x, y, wp, 0.2, 0.05) - LogisticLoss(x, y, wm, 0.2, 0.05)) / (2 * h);
    EXPECT_NEAR(gw[j], num, 1e-6);
  }
  const double num_b =
      (LogisticLoss(x, y, w, 0.2 + h, 0.05) - LogisticLoss(x, y, w, 0.2 - h, 0.05)) / (2 * h);
  EXPECT_NEAR(gb, num_b, 1e-6);
}

TEST(LogisticTest, SeparatesSeparableData) {
  DenseMatrix x = DenseMatrix::FromRows({{0.0}, {0.1}, {0.2}, {0.8}, {0.9}, {1.0}});
  const std::vector<double> y = {0, 0, 0, 1, 1, 1};
  const auto m = FitLogistic(x, y, {});
  EXPECT_LT(m.Probability(x.row(0)), 0.5);
  EXPECT_GT(m.Probability(x.row(5)), 0.5);
}

TEST(NaiveBayesTest, PosteriorFavoursNearerClass) {
  DenseMatrix x = DenseMatrix::FromRows({{0.0}, {0.2}, {0.1}, {5.0}, {5.2}, {4.9}});
  const auto m = FitNaiveBayes(x, std::vector<double>{0, 0, 0, 1, 1, 1}, 1e-9);
  EXPECT_LT(m.Probability(std::vector<double>{0.05}), 0.01);
  EXPECT_GT(m.Probability(std::vector<double>{5.1}), 0.99);
}

TEST(KfoldTest, PartitionsAndIsSeeded) {
  std::vector<std::string> ids;
  for (int i = 0; i < 103; ++i) ids.push_back("q" + std::to_string(i));
  const auto plan = Kfold(ids, 10, 42);
  const auto sizes = plan.FoldSizes();
  EXPECT_EQ(*std::max_element(sizes.begin(), sizes.end()) -
                *std::min_element(sizes.begin(), sizes.end()),
            1u);
  std::set<std::string> seen;
  for (int f = 0; f < 10; ++f) {
    for (const auto& id : plan.TestIds(f)) EXPECT_TRUE(seen.insert(id).second);
    EXPECT_EQ(plan.TestIds(f).size() + plan.TrainIds(f).size(), ids.size());
  }
  EXPECT_EQ(seen.size(), ids.size());
  EXPECT_EQ(Kfold(ids, 10, 42), plan);
  EXPECT_NE(Kfold(ids, 10, 43).assignments, plan.assignments);
  EXPECT_THROW(Kfold(ids, 1, 42), RangeError);
  EXPECT_THROW(Kfold({"a", "b"}, 3, 42), RangeError);
  EXPECT_THROW(Kfold({"a", "a", "b"}, 2, 42), ValidationError);
}

TEST(ScalerTest, MapsTrainingRangeToUnitInterval) {
  MinMaxScaler s;
  s.Fit(DenseMatrix::FromRows({{1, 5}, {3, 5}}));
  std::vector<double> row = {2, 5};
  s.TransformInPlace(row);
  EXPECT_DOUBLE_EQ(row[0], 0.5);
  EXPECT_TRUE(std::isfinite(row[1]));
}

}  // namespace
}  // namespace pipeforge::learners
