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


#ifndef PIPEFORGE_BENCH_EXPERIMENT_H_
#define PIPEFORGE_BENCH_EXPERIMENT_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pipeforge/components/registry.h"
#include "pipeforge/core/performance_matrix.h"
#include "pipeforge/core/types.h"
#include "pipeforge/features/extractor.h"
#include "pipeforge/learners/predictor.h"
#include "pipeforge/optimiser/selector.h"
#include "pipeforge/selection/ranking.h"

namespace pipeforge::bench {

// Registry scenario labels understood by ScenarioRegistry.
inline constexpr std::string_view kBaselineScenario = "baseline-18-5-2-2";
inline constexpr std::string_view kPlusNewScenario = "plus-new-components";
inline constexpr std::string_view kPrunedScenario = "pruned-5-3";

struct TaskSetting {
  features::FeatureSet features = features::FeatureSet::kCF1;
  std::optional<selection::RankingMethod> selection;
  size_t top_n = 15;
  learners::ModelKind model = learners::ModelKind::kLogisticRegression;
  learners::Hyperparameters hyper;
  // Estimator wrapped by RFE.
  learners::ModelKind rfe_estimator = learners::ModelKind::kRandomForest;

  nlohmann::json ToJson() const;
};

struct ExperimentSetting {
  std::string name;
  std::string registry = std::string(kBaselineScenario);
  std::map<QATask, TaskSetting> tasks;  // tasks not listed use TaskSetting{}
  int k = 10;
  uint64_t seed = 42;
  // Overrides for the extremely randomized trees behind ERT rankings and
  // for the RFE estimator.
  learners::Hyperparameters selection_hyper;
  std::optional<std::filesystem::path> embeddings;

  const TaskSetting& For(QATask task) const;
  nlohmann::json ToJson() const;
};

// Baseline, F, FS, NC, FS+NC, ML, FS+NC+ML, 2.0-pruned.
std::vector<std::string> SettingNames();
// Throws ConfigError listing the valid names.
ExperimentSetting NamedSetting(std::string_view name, uint64_t seed = 42, int k = 10);
// Starts from NamedSetting(j["base"]) when present; "tasks" entries
// override per task.
ExperimentSetting SettingFromJson(const nlohmann::json& j, uint64_t seed, int k);

struct FoldReport {
  int fold = 0;
  size_t total_questions = 0;
  std::map<QATask, size_t> answerable;
  std::map<QATask, std::array<size_t, 3>> top;  // predicted top-1/2/3
  std::map<QATask, size_t> selected_features;
  double train_score_ms = 0.0;
};

struct TaskAggregate {
  double answerable = 0.0;
  std::array<double, 3> top{};
  double selected_features = 0.0;
};

// Arithmetic means over folds.
struct Aggregate {
  double total_questions = 0.0;
  std::map<QATask, TaskAggregate> tasks;
  double train_score_ms = 0.0;
};

Aggregate AggregateFolds(const std::vector<FoldReport>& folds);

struct FoldData {
  int fold = 0;
  const std::vector<Question>* train = nullptr;
  const std::vector<Question>* test = nullptr;
  const PerformanceMatrix* matrix = nullptr;
  const components::Registry* registry = nullptr;
  uint64_t seed = 0;
  int jobs = 1;
};

// Per-fold component ranking strategy. Prepare runs untimed (feature
// selection); Fit and Rank are timed.
class FoldRanker {
 public:
  virtual ~FoldRanker() = default;
  virtual void Prepare(const FoldData&) {}
  virtual void Fit(const FoldData& data) = 0;
  // Component ids of the task, best first.
  virtual std::vector<std::string> Rank(const Question& question, QATask task) const = 0;
  virtual size_t SelectedFeatureCount(QATask) const { return 0; }
  virtual std::vector<selection::FeatureRanking> FeatureRankings() const { return {}; }
};

using RankerFactory = std::function<std::unique_ptr<FoldRanker>()>;

// Feature selection on the training fold, then one predictor per component.
class LearnedRanker : public FoldRanker {
 public:
  LearnedRanker(ExperimentSetting setting,
                std::shared_ptr<const features::FeatureExtractor> extractor);

  void Prepare(const FoldData& data) override;
  void Fit(const FoldData& data) override;
  std::vector<std::string> Rank(const Question& question, QATask task) const override;
  size_t SelectedFeatureCount(QATask task) const override;
  std::vector<selection::FeatureRanking> FeatureRankings() const override {
    return rankings_;
  }

  const optimiser::TaskConfigs& configs() const { return configs_; }

 private:
  ExperimentSetting setting_;
  std::shared_ptr<const features::FeatureExtractor> extractor_;
  optimiser::TaskConfigs configs_;
  std::vector<selection::FeatureRanking> rankings_;
  std::unique_ptr<optimiser::Selector> selector_;
  const components::Registry* registry_ = nullptr;
};

// True when some component of `task` scores F > 0.5 on the question.
bool IsAnswerable(const std::string& question_id, const std::vector<std::string>& component_ids,
                  const PerformanceMatrix& matrix);

struct EvaluationResult {
  std::vector<FoldReport> folds;
  Aggregate aggregate;
  // Feature rankings computed on each fold's training part.
  std::vector<std::vector<selection::FeatureRanking>> rankings;
};

// k-fold evaluation. Tasks default to every task with registered
// components. Only questions with gold for a task count towards its
// answerable and top-n numbers. Folds run on up to `jobs` threads.
EvaluationResult Evaluate(const std::vector<Question>& questions,
                          const PerformanceMatrix& matrix,
                          const components::Registry& registry,
                          const RankerFactory& factory, int k, uint64_t seed,
                          std::vector<QATask> tasks = {}, int jobs = 1);

EvaluationResult EvaluateSetting(const ExperimentSetting& setting,
                                 const std::vector<Question>& questions,
                                 const PerformanceMatrix& matrix,
                                 const components::Registry& registry,
                                 std::shared_ptr<const features::FeatureExtractor> extractor,
                                 int jobs = 1);

// Resolves a setting's registry label: the baseline registry, baseline
// plus new components, or the latter pruned to the five NED and three RL
// components with the highest corpus mean F.
components::Registry ScenarioRegistry(std::string_view scenario,
                                      const components::Registry& baseline,
                                      const components::Registry* new_components,
                                      const PerformanceMatrix& matrix);

// Undersamples the majority class of answerable/unanswerable questions
// for `task` so both classes have equal size; input order is kept.
std::vector<Question> BalanceByAnswerable(const std::vector<Question>& questions,
                                          const PerformanceMatrix& matrix,
                                          const components::Registry& registry,
                                          QATask task, uint64_t seed);

}  // namespace pipeforge::bench

#endif  // PIPEFORGE_BENCH_EXPERIMENT_H_
