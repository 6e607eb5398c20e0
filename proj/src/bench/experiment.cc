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


#include "pipeforge/bench/experiment.h"

#include <algorithm>
#include <chrono>

#include <spdlog/spdlog.h>

#include "pipeforge/core/errors.h"
#include "pipeforge/core/parallel.h"
#include "pipeforge/core/rng.h"
#include "pipeforge/learners/kfold.h"

namespace pipeforge::bench {
namespace {

using learners::ModelKind;
using nlohmann::json;

constexpr double kAnswerableThreshold = 0.5;

TaskSetting Task(features::FeatureSet fs, ModelKind model, bool select) {
  TaskSetting t;
  t.features = fs;
  t.model = model;
  if (select) t.selection = selection::RankingMethod::kErt;
  return t;
}

// Random forests for NED and RL, logistic regression for CL and QB.
std::map<QATask, TaskSetting> Tasks(features::FeatureSet fs, bool select, bool tuned_models) {
  std::map<QATask, TaskSetting> out;
  for (QATask t : {QATask::kNED, QATask::kRL, QATask::kCL, QATask::kQB}) {
    const bool forest = tuned_models && (t == QATask::kNED || t == QATask::kRL);
    out[t] = Task(fs, forest ? ModelKind::kRandomForest : ModelKind::kLogisticRegression,
                  select);
  }
  return out;
}

struct NamedSpec {
  std::string_view name;
  std::string_view registry;
  features::FeatureSet features;
  bool select;
  bool tuned_models;
};

constexpr NamedSpec kNamed[] = {
    {"Baseline", kBaselineScenario, features::FeatureSet::kCF1, false, false},
    {"F", kBaselineScenario, features::FeatureSet::kCF2, false, false},
    {"FS", kBaselineScenario, features::FeatureSet::kCF2, true, false},
    {"NC", kPlusNewScenario, features::FeatureSet::kCF1, false, false},
    {"FS+NC", kPlusNewScenario, features::FeatureSet::kCF2, true, false},
    {"ML", kBaselineScenario, features::FeatureSet::kCF1, false, true},
    {"FS+NC+ML", kPlusNewScenario, features::FeatureSet::kCF2, true, true},
    {"2.0-pruned", kPrunedScenario, features::FeatureSet::kCF2, true, true},
};

json HyperJson(const learners::Hyperparameters& h) {
  json j = json::object();
  for (const auto& [k, v] : h) j[k] = v;
  return j;
}

TaskSetting TaskFromJson(const json& j, TaskSetting t) {
  if (j.contains("features")) {
    t.features = features::FeatureSetFromName(j.at("features").get<std::string>());
  }
  if (j.contains("selection")) {
    const std::string s = j.at("selection").get<std::string>();
    if (s == "none" || s.empty()) {
      t.selection.reset();
    } else {
      t.selection = selection::RankingMethodFromName(s);
    }
  }
  if (j.contains("top_n")) t.top_n = j.at("top_n").get<size_t>();
  if (j.contains("model")) t.model = learners::ModelKindFromName(j.at("model").get<std::string>());
  if (j.contains("hyper")) t.hyper = j.at("hyper").get<learners::Hyperparameters>();
  if (j.contains("rfe_estimator")) {
    t.rfe_estimator = learners::ModelKindFromName(j.at("rfe_estimator").get<std::string>());
  }
  if (t.top_n == 0) throw ConfigError("top_n must be at least 1");
  learners::ResolveHyperparameters(t.model, t.hyper);
  return t;
}

double Score(const PerformanceMatrix& matrix, const std::string& qid, const std::string& cid,
             size_t* missing) {
  const auto f = matrix.Find(qid, cid);
  if (!f) {
    ++*missing;
    return 0.0;
  }
  return *f;
}

}  // namespace

json TaskSetting::ToJson() const {
  return {{"features", std::string(features::FeatureSetName(features))},
          {"selection", selection ? std::string(selection::RankingMethodName(*selection))
                                  : std::string("none")},
          {"top_n", top_n},
          {"model", std::string(learners::ModelKindName(model))},
          {"hyper", HyperJson(hyper)},
          {"rfe_estimator", std::string(learners::ModelKindName(rfe_estimator))}};
}

const TaskSetting& ExperimentSetting::For(QATask task) const {
  static const TaskSetting kDefault;
  auto it = tasks.find(task);
  return it == tasks.end() ? kDefault : it->second;
}

json ExperimentSetting::ToJson() const {
  json per_task = json::object();
  for (const auto& [task, t] : tasks) per_task[std::string(TaskName(task))] = t.ToJson();
  json j = {{"name", name},         {"registry", registry}, {"folds", k},
            {"seed", seed},         {"tasks", per_task},
            {"selection_hyper", HyperJson(selection_hyper)}};
  j["embeddings"] = embeddings ? json(embeddings->string()) : json(nullptr);
  return j;
}

std::vector<std::string> SettingNames() {
  std::vector<std::string> out;
  for (const auto& s : kNamed) out.emplace_back(s.name);
  return out;
}

ExperimentSetting NamedSetting(std::string_view name, uint64_t seed, int k) {
  for (const auto& s : kNamed) {
    if (s.name != name) continue;
    ExperimentSetting e;
    e.name = std::string(s.name);
    e.registry = std::string(s.registry);
    e.tasks = Tasks(s.features, s.select, s.tuned_models);
    e.seed = seed;
    e.k = k;
    return e;
  }
  std::string valid;
  for (const auto& n : SettingNames()) valid += (valid.empty() ? "" : ", ") + n;
  throw ConfigError("unknown setting '" + std::string(name) + "' (valid: " + valid + ")");
}

ExperimentSetting SettingFromJson(const json& j, uint64_t seed, int k) {
  if (j.is_string()) return NamedSetting(j.get<std::string>(), seed, k);
  ExperimentSetting e;
  if (j.contains("base")) e = NamedSetting(j.at("base").get<std::string>(), seed, k);
  e.seed = j.value("seed", seed);
  e.k = j.value("folds", k);
  e.name = j.value("name", e.name);
  if (e.name.empty()) throw ConfigError("custom settings need a \"name\"");
  e.registry = j.value("registry", e.registry);
  if (j.contains("selection_hyper")) {
    e.selection_hyper = j.at("selection_hyper").get<learners::Hyperparameters>();
  }
  if (j.contains("all_tasks")) {
    for (QATask t : {QATask::kNED, QATask::kRL, QATask::kCL, QATask::kQB}) {
      e.tasks[t] = TaskFromJson(j.at("all_tasks"), e.For(t));
    }
  }
  if (j.contains("tasks")) {
    for (const auto& [name, tj] : j.at("tasks").items()) {
      const QATask t = TaskFromName(name);
      e.tasks[t] = TaskFromJson(tj, e.For(t));
    }
  }
  return e;
}

Aggregate AggregateFolds(const std::vector<FoldReport>& folds) {
  Aggregate a;
  if (folds.empty()) return a;
  const double n = static_cast<double>(folds.size());
  for (const FoldReport& f : folds) {
    a.total_questions += static_cast<double>(f.total_questions) / n;
    a.train_score_ms += f.train_score_ms / n;
    for (const auto& [task, count] : f.answerable) {
      TaskAggregate& t = a.tasks[task];
      t.answerable += static_cast<double>(count) / n;
      for (size_t i = 0; i < 3; ++i) t.top[i] += static_cast<double>(f.top.at(task)[i]) / n;
      auto sel = f.selected_features.find(task);
      if (sel != f.selected_features.end()) {
        t.selected_features += static_cast<double>(sel->second) / n;
      }
    }
  }
  return a;
}

bool IsAnswerable(const std::string& question_id, const std::vector<std::string>& component_ids,
                  const PerformanceMatrix& matrix) {
  for (const auto& c : component_ids) {
    const auto f = matrix.Find(question_id, c);
    if (f && *f > kAnswerableThreshold) return true;
  }
  return false;
}

LearnedRanker::LearnedRanker(ExperimentSetting setting,
                             std::shared_ptr<const features::FeatureExtractor> extractor)
    : setting_(std::move(setting)), extractor_(std::move(extractor)) {
  for (QATask task : kAllTasks) {
    const TaskSetting& t = setting_.For(task);
    optimiser::TaskLearningConfig c;
    c.features.variant = t.features;
    c.features.for_task = task;
    c.features.embedding_source = setting_.embeddings;
    c.model = t.model;
    c.hyper = t.hyper;
    if (features::NeedsEmbeddings(t.features) && extractor_->embeddings() == nullptr) {
      throw ConfigError("setting " + setting_.name + " uses " +
                        std::string(features::FeatureSetName(t.features)) + " for " +
                        std::string(TaskName(task)) + " but no embeddings are loaded");
    }
    configs_[task] = std::move(c);
  }
}

void LearnedRanker::Prepare(const FoldData& data) {
  rankings_.clear();
  for (const auto& [task, count] : data.registry->Counts()) {
    const TaskSetting& t = setting_.For(task);
    optimiser::TaskLearningConfig& config = configs_.at(task);
    config.selected.clear();
    if (!t.selection) continue;

    std::vector<features::FeatureVector> vectors(data.train->size());
    ParallelFor(vectors.size(), data.jobs, [&](size_t i) {
      vectors[i] = extractor_->Extract((*data.train)[i], config.features);
    });
    std::vector<learners::TrainingSet> sets;
    for (const auto& id : data.registry->IdsFor(task)) {
      auto set = optimiser::ComponentTrainingSet(id, *data.train, vectors, *data.matrix);
      if (set.size() > 0) sets.push_back(std::move(set));
    }
    if (sets.empty()) continue;
    const uint64_t seed = DeriveSeed(data.seed, TaskName(task));
    const size_t n = std::min(t.top_n, sets.front().feature_names.size());
    selection::FeatureRanking ranking;
    try {
      if (*t.selection == selection::RankingMethod::kErt) {
        ranking = selection::RankErtAveraged(sets, setting_.selection_hyper, seed, data.jobs);
      } else {
        std::map<std::string, double> mean;
        for (size_t i = 0; i < sets.size(); ++i) {
          const auto r = selection::Rfe(sets[i], t.rfe_estimator, n, DeriveSeed(seed, i),
                                        setting_.selection_hyper, data.jobs);
          for (const auto& [name, score] : r.ordered) {
            mean[name] += score / static_cast<double>(sets.size());
          }
        }
        ranking = selection::MakeRanking(selection::RankingMethod::kRfe, mean);
      }
    } catch (const DegenerateError& e) {
      spdlog::warn("{} fold {}: no feature ranking for {} ({}); keeping all features",
                   setting_.name, data.fold, TaskName(task), e.what());
      continue;
    }
    ranking.provenance = {config.features.Identity(), std::string(TaskName(task)), seed};
    config.selected = selection::SelectTopN(ranking, n);
    rankings_.push_back(std::move(ranking));
  }
}

void LearnedRanker::Fit(const FoldData& data) {
  registry_ = data.registry;
  selector_ = std::make_unique<optimiser::Selector>(extractor_, configs_);
  selector_->Train(*data.registry, *data.train, *data.matrix, data.seed, data.jobs);
}

std::vector<std::string> LearnedRanker::Rank(const Question& question, QATask task) const {
  if (!selector_) throw ConfigError("ranker used before Fit");
  return selector_->Rank(*registry_, question, task).Ids();
}

size_t LearnedRanker::SelectedFeatureCount(QATask task) const {
  const auto& c = configs_.at(task);
  if (!c.selected.empty()) return c.selected.size();
  const size_t dim = extractor_->embeddings() ? extractor_->embeddings()->dimension() : 0;
  return features::FeatureDimension(c.features.variant, task, dim, c.features.max_tokens);
}

EvaluationResult Evaluate(const std::vector<Question>& questions,
                          const PerformanceMatrix& matrix,
                          const components::Registry& registry,
                          const RankerFactory& factory, int k, uint64_t seed,
                          std::vector<QATask> tasks, int jobs) {
  if (tasks.empty()) {
    for (const auto& [task, n] : registry.Counts()) tasks.push_back(task);
  }
  std::vector<std::string> ids;
  for (const auto& q : questions) ids.push_back(q.id);
  const learners::FoldPlan plan = learners::Kfold(ids, k, seed);
  std::map<QATask, std::vector<std::string>> members;
  for (QATask t : tasks) members[t] = registry.IdsFor(t);

  EvaluationResult result;
  result.folds.resize(k);
  result.rankings.resize(k);
  const int fold_jobs = std::min(jobs, k);
  const int inner_jobs = fold_jobs > 1 ? 1 : jobs;
  ParallelFor(static_cast<size_t>(k), fold_jobs, [&](size_t fold_index) {
    const int fold = static_cast<int>(fold_index);
    std::vector<Question> train, test;
    for (const auto& q : questions) {
      (plan.assignments.at(q.id) == fold ? test : train).push_back(q);
    }
    FoldData data{fold, &train, &test, &matrix, &registry, DeriveSeed(seed, fold_index),
                  inner_jobs};
    std::unique_ptr<FoldRanker> ranker = factory();
    ranker->Prepare(data);

    FoldReport report;
    report.fold = fold;
    report.total_questions = test.size();
    size_t missing = 0;
    const auto start = std::chrono::steady_clock::now();
    ranker->Fit(data);
    for (QATask t : tasks) {
      const auto& comp = members.at(t);
      size_t answerable = 0;
      std::array<size_t, 3> top{};
      for (const auto& q : test) {
        if (q.GoldFor(t) == nullptr) continue;
        if (!IsAnswerable(q.id, comp, matrix)) {
          // Still ranked, so timing covers every scored question.
          ranker->Rank(q, t);
          continue;
        }
        ++answerable;
        const std::vector<std::string> order = ranker->Rank(q, t);
        if (order.size() != comp.size()) {
          throw ConfigError("ranker returned " + std::to_string(order.size()) + " of " +
                            std::to_string(comp.size()) + " " + std::string(TaskName(t)) +
                            " components");
        }
        bool hit = false;
        for (size_t n = 0; n < 3; ++n) {
          if (n < order.size() &&
              Score(matrix, q.id, order[n], &missing) > kAnswerableThreshold) {
            hit = true;
          }
          top[n] += hit;
        }
      }
      report.answerable[t] = answerable;
      report.top[t] = top;
      report.selected_features[t] = ranker->SelectedFeatureCount(t);
    }
    report.train_score_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start).count();
    if (missing > 0) {
      spdlog::warn("fold {}: {} ranked (question, component) pairs have no score; read as 0",
                   fold, missing);
    }
    result.folds[fold_index] = std::move(report);
    result.rankings[fold_index] = ranker->FeatureRankings();
  });
  result.aggregate = AggregateFolds(result.folds);
  return result;
}

EvaluationResult EvaluateSetting(const ExperimentSetting& setting,
                                 const std::vector<Question>& questions,
                                 const PerformanceMatrix& matrix,
                                 const components::Registry& registry,
                                 std::shared_ptr<const features::FeatureExtractor> extractor,
                                 int jobs) {
  // Fail on configuration problems before any fold starts.
  LearnedRanker probe(setting, extractor);
  (void)probe;
  RankerFactory factory = [&] { return std::make_unique<LearnedRanker>(setting, extractor); };
  return Evaluate(questions, matrix, registry, factory, setting.k, setting.seed, {}, jobs);
}

components::Registry ScenarioRegistry(std::string_view scenario,
                                      const components::Registry& baseline,
                                      const components::Registry* new_components,
                                      const PerformanceMatrix& matrix) {
  if (scenario == kBaselineScenario || scenario == "baseline") {
    components::Registry r = baseline;
    r.set_scenario(std::string(kBaselineScenario));
    return r;
  }
  if (scenario != kPlusNewScenario && scenario != kPrunedScenario) {
    throw ConfigError("unknown registry scenario '" + std::string(scenario) + "' (valid: " +
                      std::string(kBaselineScenario) + ", " + std::string(kPlusNewScenario) +
                      ", " + std::string(kPrunedScenario) + ")");
  }
  if (new_components == nullptr) {
    throw ConfigError("scenario " + std::string(scenario) + " needs a new-components registry");
  }
  components::Registry merged =
      components::Merge(baseline, *new_components, std::string(kPlusNewScenario));
  if (scenario == kPlusNewScenario) return merged;
  return components::PruneByMeanF(merged, matrix, {{QATask::kNED, 5}, {QATask::kRL, 3}},
                                  std::string(kPrunedScenario));
}

std::vector<Question> BalanceByAnswerable(const std::vector<Question>& questions,
                                          const PerformanceMatrix& matrix,
                                          const components::Registry& registry,
                                          QATask task, uint64_t seed) {
  const auto ids = registry.IdsFor(task);
  std::vector<size_t> yes, no;
  for (size_t i = 0; i < questions.size(); ++i) {
    if (questions[i].GoldFor(task) == nullptr) continue;
    (IsAnswerable(questions[i].id, ids, matrix) ? yes : no).push_back(i);
  }
  if (yes.empty() || no.empty()) {
    spdlog::warn("cannot balance {}: one class is empty", TaskName(task));
    std::vector<Question> out;
    for (size_t i : yes) out.push_back(questions[i]);
    for (size_t i : no) out.push_back(questions[i]);
    return out;
  }
  std::vector<size_t>& major = yes.size() > no.size() ? yes : no;
  const size_t keep = std::min(yes.size(), no.size());
  Rng rng(DeriveSeed(seed, "balance"));
  rng.Shuffle(std::span<size_t>(major));
  major.resize(keep);
  std::vector<size_t> chosen = yes;
  chosen.insert(chosen.end(), no.begin(), no.end());
  std::sort(chosen.begin(), chosen.end());
  std::vector<Question> out;
  out.reserve(chosen.size());
  for (size_t i : chosen) out.push_back(questions[i]);
  return out;
}

}  // namespace pipeforge::bench
