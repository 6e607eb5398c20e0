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

#ifndef PIPEFORGE_LEARNERS_PREDICTOR_H_
#define PIPEFORGE_LEARNERS_PREDICTOR_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pipeforge/features/extractor.h"
#include "pipeforge/learners/dataset.h"
#include "pipeforge/learners/logistic.h"
#include "pipeforge/learners/naive_bayes.h"
#include "pipeforge/learners/tree.h"

namespace pipeforge::learners {

enum class ModelKind {
  kLogisticRegression,
  kDecisionTree,
  kRandomForest,
  kExtraTrees,
  kGradientBoosting,
  kGaussianNaiveBayes,
};

std::string_view ModelKindName(ModelKind kind);
// Accepts the canonical names ("LogisticRegression", ...) and the short
// forms LR, DT, RF, ERT, GBT, GNB.
ModelKind ModelKindFromName(std::string_view name);
bool IsTreeKind(ModelKind kind);

using Hyperparameters = std::map<std::string, double>;

// Every accepted key with its default:
//   LogisticRegression  learning_rate 0.1, l2 1e-3, max_iter 2000, tol 1e-6
//   DecisionTree        max_depth 12, min_samples_leaf 2, max_features 0,
//                       random_splits 0, binarize 0
//   RandomForest        n_trees 100, max_depth 12, min_samples_leaf 2,
//                       max_features 0 (= ceil(sqrt(p))), bootstrap 1,
//                       binarize 0
//   ExtraTrees          as RandomForest but max_features 0 (= p), bootstrap 0
//   GradientBoosting    n_trees 100, learning_rate 0.1, max_depth 3,
//                       min_samples_leaf 2, max_features 0, subsample 1
//   GaussianNaiveBayes  var_smoothing 1e-9
// binarize 1 makes tree kinds classify labels > 0.5 with Gini impurity.
Hyperparameters DefaultHyperparameters(ModelKind kind);

// Defaults overlaid with `overrides`; ConfigError on unknown keys.
Hyperparameters ResolveHyperparameters(ModelKind kind,
                                       const Hyperparameters& overrides);

// Averaged (forest) or additive (boosting) collection of trees.
struct TreeEnsemble {
  std::vector<Tree> trees;
  bool additive = false;
  double init = 0.0;           // additive only
  double learning_rate = 1.0;  // additive only
  bool classification = false;  // Gini impurity, binarized labels

  double Predict(std::span<const double> row) const;
  bool operator==(const TreeEnsemble&) const = default;
};

struct ConstantModel {
  double value = 0.0;
  bool operator==(const ConstantModel&) const = default;
};

// A trained model estimating how well one component will do on a question.
// Scores always lie in [0,1]. Input rows are min-max scaled with the
// training range before they reach the model.
class Predictor {
 public:
  using Model =
      std::variant<ConstantModel, LogisticModel, TreeEnsemble, NaiveBayesModel>;

  Predictor() = default;

  ModelKind kind() const { return kind_; }
  const std::vector<std::string>& feature_names() const { return feature_names_; }
  uint64_t seed() const { return seed_; }
  const Hyperparameters& hyper() const { return hyper_; }
  const Model& model() const { return model_; }
  const MinMaxScaler& scaler() const { return scaler_; }

  // True when training fell back to a constant (degenerate labels).
  bool is_constant() const { return std::holds_alternative<ConstantModel>(model_); }
  const TreeEnsemble* ensemble() const { return std::get_if<TreeEnsemble>(&model_); }
  const LogisticModel* logistic() const { return std::get_if<LogisticModel>(&model_); }

  // Throws DimensionError unless x.names equals feature_names().
  double Score(const features::FeatureVector& x) const;

  // `row` holds raw feature values aligned with feature_names().
  double ScoreRow(std::span<const double> row) const;

  // Self-describing document {kind, feature_names, seed, hyper, parameters}.
  nlohmann::json ToJson() const;
  // Fails closed: unknown kinds or malformed parameters throw ParseError.
  static Predictor FromJson(const nlohmann::json& j);

  bool operator==(const Predictor&) const = default;

 private:
  friend Predictor Train(ModelKind, const TrainingSet&, const Hyperparameters&,
                         uint64_t, int);

  ModelKind kind_ = ModelKind::kLogisticRegression;
  std::vector<std::string> feature_names_;
  uint64_t seed_ = 0;
  Hyperparameters hyper_;
  MinMaxScaler scaler_;
  Model model_;
};

// Deterministic in (training, hyper, seed); `jobs` only sets how many
// trees are grown concurrently. Logistic regression and naive Bayes train
// on labels binarized at > 0.5 and fall back to a constant class prior
// (with a warning) when only one class is present; tree kinds regress on
// the raw labels unless binarize is set. Tree i of an ensemble draws from
// DeriveSeed(seed, i), so a one-tree unbootstrapped forest reproduces the
// single tree grown with the same seed.
Predictor Train(ModelKind kind, const TrainingSet& training,
                const Hyperparameters& hyper, uint64_t seed, int jobs = 1);

}  // namespace pipeforge::learners

#endif  // PIPEFORGE_LEARNERS_PREDICTOR_H_
