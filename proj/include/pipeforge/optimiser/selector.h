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


#ifndef PIPEFORGE_OPTIMISER_SELECTOR_H_
#define PIPEFORGE_OPTIMISER_SELECTOR_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pipeforge/components/registry.h"
#include "pipeforge/core/performance_matrix.h"
#include "pipeforge/core/types.h"
#include "pipeforge/features/extractor.h"
#include "pipeforge/learners/predictor.h"

namespace pipeforge::optimiser {

// How the predictors of one task are trained.
struct TaskLearningConfig {
  features::FeatureConfig features;  // for_task is forced to the task
  learners::ModelKind model = learners::ModelKind::kRandomForest;
  learners::Hyperparameters hyper;
  // Feature subset in ranking order; empty means every extracted feature.
  std::vector<std::string> selected;

  nlohmann::json ToJson() const;
  static TaskLearningConfig FromJson(const nlohmann::json& j, QATask task);
};

using TaskConfigs = std::map<QATask, TaskLearningConfig>;

// Components of one task ordered by predicted score, descending; equal
// scores order by ascending id. entries[0] is the selected component.
struct RankedComponents {
  QATask task = QATask::kNED;
  std::vector<std::pair<std::string, double>> entries;

  std::vector<std::string> Ids() const;
  bool operator==(const RankedComponents&) const = default;
};

// Sorts raw scores into a ranking. Throws RangeError on scores outside
// [0,1].
RankedComponents RankScores(QATask task, const std::map<std::string, double>& scores);

// Training rows for one component: every question it was evaluated on,
// in question order. `vectors[i]` belongs to `questions[i]`.
learners::TrainingSet ComponentTrainingSet(const std::string& component_id,
                                           const std::vector<Question>& questions,
                                           const std::vector<features::FeatureVector>& vectors,
                                           const PerformanceMatrix& matrix);

// One predictor per registered component, each trained on the selected
// features of its task's configuration. Tasks without a configuration
// use CF1 with a random forest.
class Selector {
 public:
  Selector(std::shared_ptr<const features::FeatureExtractor> extractor,
           TaskConfigs configs);

  // Throws RangeError naming the component when a component has no
  // evaluated training question.
  void Train(const components::Registry& registry,
             const std::vector<Question>& questions,
             const PerformanceMatrix& matrix, uint64_t seed, int jobs = 1);

  // Feature vector of `question` for the task's configuration, projected
  // onto the selected features.
  features::FeatureVector Features(const Question& question, QATask task) const;

  // Throws ConfigError when a component of the task has no predictor.
  RankedComponents Rank(const components::Registry& registry,
                        const Question& question, QATask task) const;
  RankedComponents RankVector(const components::Registry& registry,
                              const features::FeatureVector& x, QATask task) const;

  const TaskLearningConfig& ConfigFor(QATask task) const;
  const std::map<std::string, learners::Predictor>& predictors() const {
    return predictors_;
  }
  const features::FeatureExtractor& extractor() const { return *extractor_; }

  // {"configs": {...}, "predictors": {id: predictor}}.
  nlohmann::json ToJson() const;
  static Selector FromJson(const nlohmann::json& j,
                           std::shared_ptr<const features::FeatureExtractor> extractor);

 private:
  std::shared_ptr<const features::FeatureExtractor> extractor_;
  TaskConfigs configs_;
  std::map<std::string, learners::Predictor> predictors_;
};

// Configuration used for tasks missing from a TaskConfigs map.
TaskLearningConfig DefaultTaskConfig(QATask task);

}  // namespace pipeforge::optimiser

#endif  // PIPEFORGE_OPTIMISER_SELECTOR_H_
