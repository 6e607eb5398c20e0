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


#include "pipeforge/optimiser/selector.h"

#include <algorithm>

#include <spdlog/spdlog.h>

#include "pipeforge/core/errors.h"
#include "pipeforge/core/parallel.h"
#include "pipeforge/core/rng.h"

namespace pipeforge::optimiser {

using learners::ModelKind;
using nlohmann::json;

TaskLearningConfig DefaultTaskConfig(QATask task) {
  TaskLearningConfig c;
  c.features.for_task = task;
  return c;
}

json TaskLearningConfig::ToJson() const {
  json hyper_json = json::object();
  for (const auto& [k, v] : hyper) hyper_json[k] = v;
  json j = {{"features", std::string(features::FeatureSetName(features.variant))},
            {"max_tokens", features.max_tokens},
            {"model", std::string(learners::ModelKindName(model))},
            {"hyper", hyper_json},
            {"selected", selected}};
  if (features.embedding_source) j["embeddings"] = features.embedding_source->string();
  return j;
}

TaskLearningConfig TaskLearningConfig::FromJson(const json& j, QATask task) {
  TaskLearningConfig c;
  c.features.for_task = task;
  c.features.variant =
      features::FeatureSetFromName(j.value("features", std::string("CF1")));
  c.features.max_tokens = j.value("max_tokens", size_t{30});
  if (j.contains("embeddings")) {
    c.features.embedding_source = j.at("embeddings").get<std::string>();
  }
  c.model = learners::ModelKindFromName(j.value("model", std::string("RandomForest")));
  if (j.contains("hyper")) c.hyper = j.at("hyper").get<learners::Hyperparameters>();
  if (j.contains("selected")) c.selected = j.at("selected").get<std::vector<std::string>>();
  return c;
}

std::vector<std::string> RankedComponents::Ids() const {
  std::vector<std::string> out;
  for (const auto& [id, s] : entries) out.push_back(id);
  return out;
}

RankedComponents RankScores(QATask task, const std::map<std::string, double>& scores) {
  RankedComponents r;
  r.task = task;
  for (const auto& [id, s] : scores) {
    if (!(s >= 0.0 && s <= 1.0)) {
      throw RangeError("score of " + id + " outside [0,1]");
    }
    r.entries.emplace_back(id, s);
  }
  // Map order is ascending id, so a stable sort keeps the id tie rule.
  std::stable_sort(r.entries.begin(), r.entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return r;
}

learners::TrainingSet ComponentTrainingSet(const std::string& component_id,
                                           const std::vector<Question>& questions,
                                           const std::vector<features::FeatureVector>& vectors,
                                           const PerformanceMatrix& matrix) {
  if (vectors.size() != questions.size()) {
    throw DimensionError("one feature vector per question is required");
  }
  learners::TrainingSet set;
  if (!vectors.empty()) set.feature_names = vectors.front().names;
  set.x = learners::DenseMatrix(0, set.feature_names.size());
  for (size_t i = 0; i < questions.size(); ++i) {
    const auto f = matrix.Find(questions[i].id, component_id);
    if (!f) continue;
    set.x.AppendRow(vectors[i].values);
    set.y.push_back(*f);
  }
  return set;
}

Selector::Selector(std::shared_ptr<const features::FeatureExtractor> extractor,
                   TaskConfigs configs)
    : extractor_(std::move(extractor)), configs_(std::move(configs)) {
  if (!extractor_) throw ConfigError("selector needs a feature extractor");
  for (auto& [task, c] : configs_) {
    c.features.for_task = task;
    learners::ResolveHyperparameters(c.model, c.hyper);
  }
}

const TaskLearningConfig& Selector::ConfigFor(QATask task) const {
  auto it = configs_.find(task);
  if (it != configs_.end()) return it->second;
  static const std::map<QATask, TaskLearningConfig> defaults = [] {
    std::map<QATask, TaskLearningConfig> d;
    for (QATask t : kAllTasks) d[t] = DefaultTaskConfig(t);
    return d;
  }();
  return defaults.at(task);
}

features::FeatureVector Selector::Features(const Question& question, QATask task) const {
  const TaskLearningConfig& c = ConfigFor(task);
  features::FeatureVector v = extractor_->Extract(question, c.features);
  return c.selected.empty() ? v : v.Select(c.selected);
}

void Selector::Train(const components::Registry& registry,
                     const std::vector<Question>& questions,
                     const PerformanceMatrix& matrix, uint64_t seed, int jobs) {
  predictors_.clear();
  std::vector<const Component*> all;
  std::map<QATask, std::vector<features::FeatureVector>> vectors;
  for (const auto& [id, c] : registry.components()) {
    all.push_back(&c);
    vectors.try_emplace(c.task);
  }
  for (auto& [task, list] : vectors) {
    list.resize(questions.size());
    ParallelFor(questions.size(), jobs,
                [&](size_t i) { list[i] = Features(questions[i], task); });
  }
  std::vector<learners::Predictor> trained(all.size());
  ParallelFor(all.size(), jobs, [&](size_t i) {
    const Component& c = *all[i];
    const auto set = ComponentTrainingSet(c.id, questions, vectors.at(c.task), matrix);
    if (set.size() == 0) {
      throw RangeError("component " + c.id + " has no evaluated training question");
    }
    const TaskLearningConfig& config = ConfigFor(c.task);
    trained[i] = learners::Train(config.model, set, config.hyper,
                                 DeriveSeed(seed, Fnv1a64(c.id)));
  });
  for (size_t i = 0; i < all.size(); ++i) {
    predictors_.emplace(all[i]->id, std::move(trained[i]));
  }
}

RankedComponents Selector::RankVector(const components::Registry& registry,
                                      const features::FeatureVector& x,
                                      QATask task) const {
  std::map<std::string, double> scores;
  for (const auto& id : registry.IdsFor(task)) {
    auto it = predictors_.find(id);
    if (it == predictors_.end()) throw ConfigError("no predictor for component " + id);
    scores[id] = it->second.Score(x);
  }
  return RankScores(task, scores);
}

RankedComponents Selector::Rank(const components::Registry& registry,
                                const Question& question, QATask task) const {
  return RankVector(registry, Features(question, task), task);
}

json Selector::ToJson() const {
  json configs = json::object();
  for (const auto& [task, c] : configs_) configs[std::string(TaskName(task))] = c.ToJson();
  json predictors = json::object();
  for (const auto& [id, p] : predictors_) predictors[id] = p.ToJson();
  return {{"configs", configs}, {"predictors", predictors}};
}

Selector Selector::FromJson(const json& j,
                            std::shared_ptr<const features::FeatureExtractor> extractor) {
  try {
    TaskConfigs configs;
    for (const auto& [name, c] : j.at("configs").items()) {
      const QATask task = TaskFromName(name);
      configs[task] = TaskLearningConfig::FromJson(c, task);
    }
    Selector s(std::move(extractor), std::move(configs));
    for (const auto& [id, p] : j.at("predictors").items()) {
      s.predictors_.emplace(id, learners::Predictor::FromJson(p));
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed selector document: ") + e.what());
  }
}

}  // namespace pipeforge::optimiser
