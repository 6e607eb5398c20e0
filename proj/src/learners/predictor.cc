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

#include "pipeforge/learners/predictor.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include <spdlog/spdlog.h>

#include "pipeforge/core/errors.h"
#include "pipeforge/core/parallel.h"
#include "pipeforge/core/rng.h"

namespace pipeforge::learners {
namespace {

using nlohmann::json;

struct KindName {
  ModelKind kind;
  std::string_view name;
  std::string_view short_name;
};

constexpr std::array<KindName, 6> kKindNames = {{
    {ModelKind::kLogisticRegression, "LogisticRegression", "LR"},
    {ModelKind::kDecisionTree, "DecisionTree", "DT"},
    {ModelKind::kRandomForest, "RandomForest", "RF"},
    {ModelKind::kExtraTrees, "ExtremelyRandomizedTrees", "ERT"},
    {ModelKind::kGradientBoosting, "GradientBoostedTrees", "GBT"},
    {ModelKind::kGaussianNaiveBayes, "GaussianNaiveBayes", "GNB"},
}};

std::vector<double> Binarize(std::span<const double> y) {
  std::vector<double> out(y.size());
  std::transform(y.begin(), y.end(), out.begin(),
                 [](double v) { return v > 0.5 ? 1.0 : 0.0; });
  return out;
}

size_t AsCount(const Hyperparameters& h, const char* key) {
  const double v = h.at(key);
  if (!(v >= 0.0) || v != std::floor(v)) {
    throw ConfigError(std::string("hyperparameter ") + key +
                      " must be a non-negative integer");
  }
  return static_cast<size_t>(v);
}

TreeParams TreeParamsFrom(ModelKind kind, const Hyperparameters& h, size_t p) {
  TreeParams params;
  params.max_depth = static_cast<int>(AsCount(h, "max_depth"));
  params.min_samples_leaf = AsCount(h, "min_samples_leaf");
  if (params.min_samples_leaf == 0) {
    throw ConfigError("min_samples_leaf must be at least 1");
  }
  params.max_features = std::min(AsCount(h, "max_features"), p);
  if (params.max_features == 0 && kind == ModelKind::kRandomForest) {
    params.max_features = static_cast<size_t>(
        std::ceil(std::sqrt(static_cast<double>(p))));
  }
  params.random_splits = kind == ModelKind::kExtraTrees ||
                         (h.count("random_splits") && h.at("random_splits") != 0.0);
  if (h.count("binarize") && h.at("binarize") != 0.0) {
    params.impurity = Impurity::kGini;
  }
  return params;
}

TreeEnsemble FitForest(ModelKind kind, const DenseMatrix& x,
                       std::span<const double> y, const Hyperparameters& h,
                       uint64_t seed, int jobs) {
  const TreeParams params = TreeParamsFrom(kind, h, x.cols());
  const size_t n_trees =
      kind == ModelKind::kDecisionTree ? 1 : std::max<size_t>(1, AsCount(h, "n_trees"));
  const bool bootstrap = kind != ModelKind::kDecisionTree && h.at("bootstrap") != 0.0;
  TreeEnsemble ensemble;
  ensemble.classification = params.impurity == Impurity::kGini;
  ensemble.trees.resize(n_trees);
  ParallelFor(n_trees, jobs, [&](size_t i) {
    Rng rng(DeriveSeed(seed, i));
    std::vector<size_t> samples(x.rows());
    if (bootstrap) {
      for (size_t& s : samples) s = rng.Below(x.rows());
      std::sort(samples.begin(), samples.end());
    } else {
      std::iota(samples.begin(), samples.end(), 0);
    }
    ensemble.trees[i] = FitTree(x, y, std::move(samples), params, rng);
  });
  return ensemble;
}

TreeEnsemble FitBoosting(const DenseMatrix& x, std::span<const double> y,
                         const Hyperparameters& h, uint64_t seed) {
  const TreeParams params =
      TreeParamsFrom(ModelKind::kGradientBoosting, h, x.cols());
  const size_t n_trees = AsCount(h, "n_trees");
  const double subsample = h.at("subsample");
  if (!(subsample > 0.0 && subsample <= 1.0)) {
    throw ConfigError("subsample must lie in (0,1]");
  }
  TreeEnsemble ensemble;
  ensemble.additive = true;
  ensemble.learning_rate = h.at("learning_rate");
  ensemble.init = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
  std::vector<double> prediction(y.size(), ensemble.init);
  std::vector<double> residual(y.size());
  const size_t m = std::max<size_t>(
      1, static_cast<size_t>(std::floor(subsample * static_cast<double>(y.size()))));
  for (size_t i = 0; i < n_trees; ++i) {
    for (size_t r = 0; r < y.size(); ++r) residual[r] = y[r] - prediction[r];
    Rng rng(DeriveSeed(seed, i));
    std::vector<size_t> samples(y.size());
    std::iota(samples.begin(), samples.end(), 0);
    if (m < samples.size()) {
      rng.Shuffle(std::span<size_t>(samples));
      samples.resize(m);
      std::sort(samples.begin(), samples.end());
    }
    Tree tree = FitTree(x, residual, std::move(samples), params, rng);
    for (size_t r = 0; r < y.size(); ++r) {
      prediction[r] += ensemble.learning_rate * tree.Predict(x.row(r));
    }
    ensemble.trees.push_back(std::move(tree));
  }
  return ensemble;
}

json ModelToJson(const Predictor::Model& model) {
  return std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ConstantModel>) {
          return {{"type", "constant"}, {"value", m.value}};
        } else if constexpr (std::is_same_v<T, LogisticModel>) {
          json j = m.ToJson();
          j["type"] = "logistic";
          return j;
        } else if constexpr (std::is_same_v<T, NaiveBayesModel>) {
          json j = m.ToJson();
          j["type"] = "naive_bayes";
          return j;
        } else {
          json trees = json::array();
          for (const Tree& t : m.trees) trees.push_back(t.ToJson());
          return {{"type", "trees"},
                  {"additive", m.additive},
                  {"init", m.init},
                  {"learning_rate", m.learning_rate},
                  {"classification", m.classification},
                  {"trees", trees}};
        }
      },
      model);
}

Predictor::Model ModelFromJson(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "constant") return ConstantModel{j.at("value").get<double>()};
  if (type == "logistic") return LogisticModel::FromJson(j);
  if (type == "naive_bayes") return NaiveBayesModel::FromJson(j);
  if (type == "trees") {
    TreeEnsemble e;
    e.additive = j.at("additive").get<bool>();
    e.init = j.at("init").get<double>();
    e.learning_rate = j.at("learning_rate").get<double>();
    e.classification = j.value("classification", false);
    for (const json& t : j.at("trees")) e.trees.push_back(Tree::FromJson(t));
    if (e.trees.empty() && !e.additive) throw ParseError("tree ensemble without trees");
    return e;
  }
  throw ParseError("unknown model type '" + type + "'");
}

}  // namespace

std::string_view ModelKindName(ModelKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "?";
}

ModelKind ModelKindFromName(std::string_view name) {
  for (const auto& k : kKindNames) {
    if (k.name == name || k.short_name == name) return k.kind;
  }
  std::string valid;
  for (const auto& k : kKindNames) {
    valid += (valid.empty() ? "" : ", ") + std::string(k.name);
  }
  throw ParseError("unknown model kind '" + std::string(name) + "' (valid: " + valid + ")");
}

bool IsTreeKind(ModelKind kind) {
  return kind == ModelKind::kDecisionTree || kind == ModelKind::kRandomForest ||
         kind == ModelKind::kExtraTrees || kind == ModelKind::kGradientBoosting;
}

Hyperparameters DefaultHyperparameters(ModelKind kind) {
  switch (kind) {
    case ModelKind::kLogisticRegression:
      return {{"learning_rate", 0.1}, {"l2", 1e-3}, {"max_iter", 2000}, {"tol", 1e-6}};
    case ModelKind::kDecisionTree:
      return {{"max_depth", 12},    {"min_samples_leaf", 2}, {"max_features", 0},
              {"random_splits", 0}, {"binarize", 0}};
    case ModelKind::kRandomForest:
      return {{"n_trees", 100},     {"max_depth", 12}, {"min_samples_leaf", 2},
              {"max_features", 0},  {"bootstrap", 1},  {"binarize", 0}};
    case ModelKind::kExtraTrees:
      return {{"n_trees", 100},     {"max_depth", 12}, {"min_samples_leaf", 2},
              {"max_features", 0},  {"bootstrap", 0},  {"binarize", 0}};
    case ModelKind::kGradientBoosting:
      return {{"n_trees", 100},      {"learning_rate", 0.1}, {"max_depth", 3},
              {"min_samples_leaf", 2}, {"max_features", 0},  {"subsample", 1.0}};
    case ModelKind::kGaussianNaiveBayes:
      return {{"var_smoothing", 1e-9}};
  }
  return {};
}

Hyperparameters ResolveHyperparameters(ModelKind kind,
                                       const Hyperparameters& overrides) {
  Hyperparameters h = DefaultHyperparameters(kind);
  for (const auto& [key, value] : overrides) {
    auto it = h.find(key);
    if (it == h.end()) {
      throw ConfigError("hyperparameter '" + key + "' is not valid for " +
                        std::string(ModelKindName(kind)));
    }
    if (!std::isfinite(value)) throw ConfigError("hyperparameter '" + key + "' is not finite");
    it->second = value;
  }
  return h;
}

double TreeEnsemble::Predict(std::span<const double> row) const {
  if (additive) {
    double sum = init;
    for (const Tree& t : trees) sum += learning_rate * t.Predict(row);
    return sum;
  }
  double sum = 0.0;
  for (const Tree& t : trees) sum += t.Predict(row);
  return sum / static_cast<double>(trees.size());
}

double Predictor::Score(const features::FeatureVector& x) const {
  if (x.names != feature_names_) {
    throw DimensionError("feature vector " + x.config +
                         " does not match the predictor's feature names");
  }
  return ScoreRow(x.values);
}

double Predictor::ScoreRow(std::span<const double> row) const {
  if (row.size() != feature_names_.size()) {
    throw DimensionError("predictor expects " + std::to_string(feature_names_.size()) +
                         " features, got " + std::to_string(row.size()));
  }
  std::vector<double> scaled(row.begin(), row.end());
  scaler_.TransformInPlace(scaled);
  const double raw = std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ConstantModel>) {
          return m.value;
        } else if constexpr (std::is_same_v<T, TreeEnsemble>) {
          return m.Predict(scaled);
        } else {
          return m.Probability(scaled);
        }
      },
      model_);
  return std::clamp(raw, 0.0, 1.0);
}

json Predictor::ToJson() const {
  json hyper = json::object();
  for (const auto& [k, v] : hyper_) hyper[k] = v;
  return {{"kind", std::string(ModelKindName(kind_))},
          {"feature_names", feature_names_},
          {"seed", seed_},
          {"hyper", hyper},
          {"parameters", {{"scaler", scaler_.ToJson()}, {"model", ModelToJson(model_)}}}};
}

Predictor Predictor::FromJson(const json& j) {
  try {
    Predictor p;
    p.kind_ = ModelKindFromName(j.at("kind").get<std::string>());
    p.feature_names_ = j.at("feature_names").get<std::vector<std::string>>();
    p.seed_ = j.at("seed").get<uint64_t>();
    p.hyper_ = j.at("hyper").get<Hyperparameters>();
    const json& params = j.at("parameters");
    p.scaler_ = MinMaxScaler::FromJson(params.at("scaler"));
    p.model_ = ModelFromJson(params.at("model"));
    if (p.scaler_.size() != p.feature_names_.size()) {
      throw ParseError("scaler width does not match feature names");
    }
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed predictor document: ") + e.what());
  }
}

Predictor Train(ModelKind kind, const TrainingSet& training,
                const Hyperparameters& hyper, uint64_t seed, int jobs) {
  training.Validate();
  if (training.size() == 0) throw RangeError("cannot train on an empty training set");
  Predictor p;
  p.kind_ = kind;
  p.feature_names_ = training.feature_names;
  p.seed_ = seed;
  p.hyper_ = ResolveHyperparameters(kind, hyper);
  p.scaler_.Fit(training.x);
  const DenseMatrix x = p.scaler_.Transform(training.x);
  const Hyperparameters& h = p.hyper_;

  switch (kind) {
    case ModelKind::kLogisticRegression:
    case ModelKind::kGaussianNaiveBayes: {
      const std::vector<double> y = Binarize(training.y);
      const double positives = std::accumulate(y.begin(), y.end(), 0.0);
      if (positives == 0.0 || positives == static_cast<double>(y.size())) {
        spdlog::warn("{}: all binarized labels are {}; using the constant class prior",
                     ModelKindName(kind), positives == 0.0 ? 0 : 1);
        p.model_ = ConstantModel{positives / static_cast<double>(y.size())};
        break;
      }
      if (kind == ModelKind::kLogisticRegression) {
        LogisticOptions options;
        options.learning_rate = h.at("learning_rate");
        options.l2 = h.at("l2");
        options.max_iterations = AsCount(h, "max_iter");
        options.tolerance = h.at("tol");
        p.model_ = FitLogistic(x, y, options);
      } else {
        p.model_ = FitNaiveBayes(x, y, h.at("var_smoothing"));
      }
      break;
    }
    case ModelKind::kDecisionTree:
    case ModelKind::kRandomForest:
    case ModelKind::kExtraTrees: {
      const bool binarize = h.at("binarize") != 0.0;
      const std::vector<double> y =
          binarize ? Binarize(training.y) : training.y;
      p.model_ = FitForest(kind, x, y, h, seed, jobs);
      break;
    }
    case ModelKind::kGradientBoosting:
      p.model_ = FitBoosting(x, training.y, h, seed);
      break;
  }
  return p;
}

}  // namespace pipeforge::learners
