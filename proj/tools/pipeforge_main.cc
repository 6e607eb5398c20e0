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


// Command-line entry point: synth, extract, matrix, experiment,
// select-features, train, answer.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "pipeforge/bench/experiment.h"
#include "pipeforge/bench/runner.h"
#include "pipeforge/bench/synthetic.h"
#include "pipeforge/components/registry.h"
#include "pipeforge/components/scoring.h"
#include "pipeforge/core/csv.h"
#include "pipeforge/core/dataset.h"
#include "pipeforge/core/errors.h"
#include "pipeforge/core/logging.h"
#include "pipeforge/core/performance_matrix.h"
#include "pipeforge/features/extractor.h"
#include "pipeforge/optimiser/compose.h"
#include "pipeforge/optimiser/execute.h"
#include "pipeforge/optimiser/selector.h"
#include "pipeforge/selection/ranking.h"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace pipeforge;

namespace {

struct Common {
  uint64_t seed = 42;
  int jobs = 1;
  fs::path out = "out";
};

void AddCommon(CLI::App* app, Common* c) {
  app->add_option("--seed", c->seed, "Random seed")->capture_default_str();
  app->add_option("--jobs", c->jobs, "Parallelism bound")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--out", c->out, "Output directory")->capture_default_str();
}

void EchoConfig(const fs::path& out, const std::string& command, json config,
                const Common& c) {
  fs::create_directories(out);
  config["command"] = command;
  config["seed"] = c.seed;
  config["jobs"] = c.jobs;
  WriteJsonFile(out / "config.json", config);
}

std::ofstream OpenOut(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

// "CF2" applies to every task; "NED=CF2,RL=CF3" sets individual tasks.
std::map<QATask, std::string> PerTask(const std::string& spec) {
  std::map<QATask, std::string> out;
  if (spec.empty()) return out;
  if (spec.find('=') == std::string::npos) {
    for (QATask t : {QATask::kNED, QATask::kRL, QATask::kCL, QATask::kQB}) out[t] = spec;
    return out;
  }
  size_t start = 0;
  while (start <= spec.size()) {
    const size_t comma = std::min(spec.find(',', start), spec.size());
    const std::string item = spec.substr(start, comma - start);
    const size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected TASK=VALUE, got '" + item + "'");
    out[TaskFromName(item.substr(0, eq))] = item.substr(eq + 1);
    start = comma + 1;
  }
  return out;
}

std::shared_ptr<const features::EmbeddingTable> MaybeEmbeddings(const std::string& path) {
  if (path.empty()) return nullptr;
  return std::make_shared<const features::EmbeddingTable>(features::LoadEmbeddings(path));
}

components::Registry LoadRegistries(const std::vector<std::string>& paths) {
  if (paths.empty()) throw ConfigError("at least one --registry is required");
  components::Registry r = components::Registry::Load(paths.front());
  for (size_t i = 1; i < paths.size(); ++i) {
    r = components::Merge(r, components::Registry::Load(paths[i]), r.scenario());
  }
  return r;
}

// ---- synth ----------------------------------------------------------------

struct SynthArgs {
  size_t n = 1000;
  size_t dim = 16;
};

int RunSynth(const SynthArgs& a, const Common& c) {
  bench::SyntheticSpec spec;
  spec.n_questions = a.n;
  spec.seed = c.seed;
  spec.embedding_dim = a.dim;
  const bench::SyntheticCorpus corpus = bench::GenerateSynthetic(spec);
  fs::create_directories(c.out);
  WriteQuestions(c.out / "questions.json", corpus.questions);
  for (auto preset : {bench::ComponentPreset::kBaseline, bench::ComponentPreset::kNewComponents,
                      bench::ComponentPreset::kPlantedNed}) {
    const std::string name(bench::ComponentPresetName(preset));
    components::Registry r(name);
    for (auto& comp : bench::PresetComponents(preset, c.seed)) r.Register(comp);
    r.Save(c.out / (name + ".json"));
  }
  json experiment = {{"dataset", "questions.json"},
                     {"registry", "baseline.json"},
                     {"new_components", "new-components.json"},
                     {"folds", 10},
                     {"seed", c.seed},
                     {"settings", bench::SettingNames()}};
  if (a.dim > 0) {
    bench::SaveEmbeddings(c.out / "embeddings.txt", corpus.embeddings);
    experiment["embeddings"] = "embeddings.txt";
  }
  WriteJsonFile(c.out / "experiment.json", experiment);
  EchoConfig(c.out, "synth", {{"n_questions", a.n}, {"embedding_dim", a.dim}}, c);
  std::cout << fmt::format("wrote {} questions to {}\n", corpus.questions.size(),
                           c.out.string());
  return 0;
}

// ---- extract --------------------------------------------------------------

struct ExtractArgs {
  std::string dataset;
  std::string config = "CF1";
  std::string task = "NED";
  std::string embeddings;
  size_t max_tokens = 30;
};

int RunExtract(const ExtractArgs& a, const Common& c) {
  const auto questions = LoadDataset(a.dataset);
  features::FeatureConfig config;
  config.variant = features::FeatureSetFromName(a.config);
  config.for_task = TaskFromName(a.task);
  config.max_tokens = a.max_tokens;
  if (!a.embeddings.empty()) config.embedding_source = a.embeddings;
  config.Validate();
  const auto extractor = features::FeatureExtractor::Default(MaybeEmbeddings(a.embeddings));
  fs::create_directories(c.out);
  auto out = OpenOut(c.out / "features.csv");
  std::vector<std::string> header = {"question_id"};
  const auto names = extractor.FeatureNames(config);
  header.insert(header.end(), names.begin(), names.end());
  csv::WriteRow(out, header);
  for (const auto& q : questions) {
    features::FeatureVector v;
    try {
      v = extractor.Extract(q, config);
    } catch (const Error& e) {
      throw Error("question " + q.id + ": " + e.what());
    }
    std::vector<std::string> row = {q.id};
    for (double x : v.values) row.push_back(fmt::format("{}", x));
    csv::WriteRow(out, row);
  }
  EchoConfig(c.out, "extract",
             {{"dataset", a.dataset}, {"config", config.Identity()},
              {"embeddings", a.embeddings}, {"max_tokens", a.max_tokens}},
             c);
  return 0;
}

// ---- matrix ---------------------------------------------------------------

struct MatrixArgs {
  std::string dataset;
  std::vector<std::string> registries;
};

int RunMatrix(const MatrixArgs& a, const Common& c) {
  const auto questions = LoadDataset(a.dataset);
  const auto registry = LoadRegistries(a.registries);
  const auto matrix = components::BuildMatrix(registry, questions, c.seed, c.jobs);
  fs::create_directories(c.out);
  matrix.SaveCsv(c.out / "matrix.csv");
  EchoConfig(c.out, "matrix", {{"dataset", a.dataset}, {"registries", a.registries}}, c);
  std::cout << fmt::format("{} entries over {} ({})\n", matrix.size(), registry.scenario(),
                           registry.CountsLabel());
  return 0;
}

// ---- experiment -----------------------------------------------------------

struct ExperimentArgs {
  std::string file;
  bool seed_given = false;
};

int RunExperimentCommand(const ExperimentArgs& a, const Common& c) {
  const auto file = bench::LoadExperimentFile(
      a.file, a.seed_given ? std::optional<uint64_t>(c.seed) : std::nullopt);
  const auto results = bench::RunExperiment(file, c.out, c.jobs);
  for (const auto& r : results) {
    std::string counts;
    for (const auto& [task, n] : r.registry_counts) {
      counts += fmt::format("{}{}={}", counts.empty() ? "" : " ", TaskName(task), n);
    }
    std::cout << fmt::format("{}: registry {} {}\n", r.setting.name, r.registry_scenario,
                             counts);
    for (const auto& [task, t] : r.evaluation.aggregate.tasks) {
      std::cout << fmt::format("  {:<3} answerable {:8.1f}  top1 {:8.1f}  top2 {:8.1f}  "
                               "top3 {:8.1f}  features {:5.1f}\n",
                               TaskName(task), t.answerable, t.top[0], t.top[1], t.top[2],
                               t.selected_features);
    }
  }
  std::cout << fmt::format("results in {}\n", c.out.string());
  return 0;
}

// ---- select-features ------------------------------------------------------

struct SelectArgs {
  std::string dataset;
  std::string matrix;
  std::vector<std::string> registries;
  std::string config = "CF2";
  std::string task = "NED";
  std::string method = "ERT";
  std::string estimator = "RandomForest";
  std::string embeddings;
  size_t top_n = 15;
};

int RunSelect(const SelectArgs& a, const Common& c) {
  const auto questions = LoadDataset(a.dataset);
  const auto registry = LoadRegistries(a.registries);
  const auto matrix = PerformanceMatrix::LoadCsv(a.matrix);
  features::FeatureConfig config;
  config.variant = features::FeatureSetFromName(a.config);
  config.for_task = TaskFromName(a.task);
  if (!a.embeddings.empty()) config.embedding_source = a.embeddings;
  config.Validate();
  const auto extractor = features::FeatureExtractor::Default(MaybeEmbeddings(a.embeddings));
  std::vector<features::FeatureVector> vectors;
  for (const auto& q : questions) vectors.push_back(extractor.Extract(q, config));
  std::vector<learners::TrainingSet> sets;
  for (const auto& id : registry.IdsFor(config.for_task)) {
    auto set = optimiser::ComponentTrainingSet(id, questions, vectors, matrix);
    if (set.size() > 0) sets.push_back(std::move(set));
  }
  if (sets.empty()) {
    throw ConfigError("no " + a.task + " component has matrix entries for this dataset");
  }
  const size_t n = std::min(a.top_n, sets.front().feature_names.size());
  selection::FeatureRanking ranking;
  const auto method = selection::RankingMethodFromName(a.method);
  if (method == selection::RankingMethod::kErt) {
    ranking = selection::RankErtAveraged(sets, {}, c.seed, c.jobs);
  } else {
    std::map<std::string, double> mean;
    for (size_t i = 0; i < sets.size(); ++i) {
      const auto r = selection::Rfe(sets[i], learners::ModelKindFromName(a.estimator), n,
                                    DeriveSeed(c.seed, i), {}, c.jobs);
      for (const auto& [name, s] : r.ordered) mean[name] += s / static_cast<double>(sets.size());
    }
    ranking = selection::MakeRanking(method, mean);
  }
  ranking.provenance = {config.Identity(), a.task, c.seed};
  fs::create_directories(c.out);
  {
    auto out = OpenOut(c.out / "ranking.csv");
    selection::WriteRankingCsv(out, {ranking});
  }
  WriteJsonFile(c.out / "selected.json", selection::SelectTopN(ranking, n));
  EchoConfig(c.out, "select-features",
             {{"dataset", a.dataset}, {"matrix", a.matrix}, {"registries", a.registries},
              {"config", config.Identity()}, {"method", a.method}, {"top_n", a.top_n},
              {"estimator", a.estimator}, {"embeddings", a.embeddings}},
             c);
  for (const auto& name : selection::SelectTopN(ranking, n)) std::cout << name << '\n';
  return 0;
}

// ---- train ----------------------------------------------------------------

struct TrainArgs {
  std::string dataset;
  std::string matrix;
  std::vector<std::string> registries;
  std::string features = "CF2";
  std::string model = "NED=RandomForest,RL=RandomForest,CL=LogisticRegression,"
                      "QB=LogisticRegression";
  std::string select;
  std::string embeddings;
  size_t top_n = 15;
  bool binarize = false;
};

int RunTrain(const TrainArgs& a, const Common& c) {
  const auto questions = LoadDataset(a.dataset);
  const auto registry = LoadRegistries(a.registries);
  const auto matrix = a.matrix.empty()
                          ? components::BuildMatrix(registry, questions, c.seed, c.jobs)
                          : PerformanceMatrix::LoadCsv(a.matrix);
  auto extractor = std::make_shared<const features::FeatureExtractor>(
      features::FeatureExtractor::Default(MaybeEmbeddings(a.embeddings)));

  bench::ExperimentSetting setting;
  setting.name = "train";
  if (!a.embeddings.empty()) setting.embeddings = fs::absolute(a.embeddings);
  const auto feature_spec = PerTask(a.features);
  const auto model_spec = PerTask(a.model);
  const auto select_spec = PerTask(a.select);
  for (QATask t : {QATask::kNED, QATask::kRL, QATask::kCL, QATask::kQB}) {
    bench::TaskSetting ts;
    if (feature_spec.count(t)) ts.features = features::FeatureSetFromName(feature_spec.at(t));
    ts.model = model_spec.count(t) ? learners::ModelKindFromName(model_spec.at(t))
                                   : learners::ModelKind::kRandomForest;
    if (select_spec.count(t) && select_spec.at(t) != "none") {
      ts.selection = selection::RankingMethodFromName(select_spec.at(t));
    }
    ts.top_n = a.top_n;
    if (a.binarize && learners::DefaultHyperparameters(ts.model).count("binarize")) {
      ts.hyper["binarize"] = 1.0;
    }
    setting.tasks[t] = ts;
  }
  bench::LearnedRanker ranker(setting, extractor);
  bench::FoldData data{0, &questions, &questions, &matrix, &registry, c.seed, c.jobs};
  ranker.Prepare(data);
  optimiser::Selector selector(extractor, ranker.configs());
  selector.Train(registry, questions, matrix, c.seed, c.jobs);
  fs::create_directories(c.out);
  WriteJsonFile(c.out / "selector.json", selector.ToJson());
  if (!ranker.FeatureRankings().empty()) {
    auto out = OpenOut(c.out / "rankings.csv");
    selection::WriteRankingCsv(out, ranker.FeatureRankings());
  }
  EchoConfig(c.out, "train",
             {{"dataset", a.dataset}, {"matrix", a.matrix}, {"registries", a.registries},
              {"setting", setting.ToJson()}, {"binarize", a.binarize}},
             c);
  std::cout << fmt::format("trained {} predictors into {}\n", selector.predictors().size(),
                           c.out.string());
  return 0;
}

// ---- answer ---------------------------------------------------------------

struct AnswerArgs {
  std::string question;
  std::string model_dir;
  std::vector<std::string> registries;
  std::string goal = "NED,RL,QB";
  std::string k;
  bool fallback = false;
};

int RunAnswer(const AnswerArgs& a, const Common& c) {
  Question q;
  q.id = "cli";
  q.text = a.question;
  if (q.text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw ValidationError("question text is empty");
  }
  const fs::path model_file = fs::path(a.model_dir) / "selector.json";
  if (!fs::exists(model_file)) {
    throw ConfigError("missing model artifact " + model_file.string() + " (run `train` first)");
  }
  const json doc = ReadJsonFile(model_file);
  std::string embeddings;
  for (const auto& [task, cj] : doc.at("configs").items()) {
    if (cj.contains("embeddings")) embeddings = cj.at("embeddings").get<std::string>();
  }
  auto extractor = std::make_shared<const features::FeatureExtractor>(
      features::FeatureExtractor::Default(MaybeEmbeddings(embeddings)));
  const auto selector = optimiser::Selector::FromJson(doc, extractor);
  const auto registry = LoadRegistries(a.registries);
  const auto goal = optimiser::Goal::Parse(a.goal, a.k);

  std::map<QATask, optimiser::RankedComponents> rankings;
  for (QATask t : goal.tasks) rankings[t] = selector.Rank(registry, q, t);
  const auto plans = optimiser::Compose(goal, rankings);
  const auto& plan = plans.front();
  const auto result = optimiser::Execute(plan, q, registry, {c.seed, a.fallback});

  json plan_json = plan.ToJson();
  plan_json["goal"] = goal.ToJson();
  fs::create_directories(c.out);
  WriteJsonFile(c.out / "plan.json", plan_json);
  WriteJsonFile(c.out / "trace.json", result.ToJson());
  EchoConfig(c.out, "answer",
             {{"question", a.question}, {"model", a.model_dir}, {"registries", a.registries},
              {"goal", goal.ToJson()}, {"fallback", a.fallback}},
             c);
  std::cout << plan_json.dump(2) << '\n';
  if (result.sparql) std::cout << *result.sparql << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  InitLogging();
  CLI::App app{"pipeforge: per-question component selection for QA pipelines"};
  app.require_subcommand(1);
  Common common;

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus and registries");
  synth_cmd->add_option("--n", synth.n, "Number of questions")->capture_default_str();
  synth_cmd->add_option("--embedding-dim", synth.dim, "Word vector width (0: none)")
      ->capture_default_str();
  AddCommon(synth_cmd, &common);

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Write question features as CSV");
  extract_cmd->add_option("--dataset", extract.dataset)->required();
  extract_cmd->add_option("--config", extract.config, "CF1..CF6")->capture_default_str();
  extract_cmd->add_option("--task", extract.task)->capture_default_str();
  extract_cmd->add_option("--embeddings", extract.embeddings);
  extract_cmd->add_option("--max-tokens", extract.max_tokens)->capture_default_str();
  AddCommon(extract_cmd, &common);

  MatrixArgs matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "Run components and score them");
  matrix_cmd->add_option("--dataset", matrix.dataset)->required();
  matrix_cmd->add_option("--registry", matrix.registries, "Registry file (repeatable)")
      ->required();
  AddCommon(matrix_cmd, &common);

  ExperimentArgs experiment;
  auto* experiment_cmd = app.add_subcommand("experiment", "Run a k-fold settings grid");
  experiment_cmd->add_option("--file", experiment.file, "Experiment JSON")->required();
  AddCommon(experiment_cmd, &common);

  SelectArgs select;
  auto* select_cmd = app.add_subcommand("select-features", "Rank features of one task");
  select_cmd->add_option("--dataset", select.dataset)->required();
  select_cmd->add_option("--matrix", select.matrix)->required();
  select_cmd->add_option("--registry", select.registries)->required();
  select_cmd->add_option("--config", select.config)->capture_default_str();
  select_cmd->add_option("--task", select.task)->capture_default_str();
  select_cmd->add_option("--method", select.method, "ERT or RFE")->capture_default_str();
  select_cmd->add_option("--estimator", select.estimator, "RFE estimator")
      ->capture_default_str();
  select_cmd->add_option("--top-n", select.top_n)->capture_default_str();
  select_cmd->add_option("--embeddings", select.embeddings);
  AddCommon(select_cmd, &common);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train one predictor per component");
  train_cmd->add_option("--dataset", train.dataset)->required();
  train_cmd->add_option("--matrix", train.matrix, "Matrix CSV (built when omitted)");
  train_cmd->add_option("--registry", train.registries)->required();
  train_cmd->add_option("--features", train.features, "CFn or TASK=CFn,...")
      ->capture_default_str();
  train_cmd->add_option("--model", train.model, "Kind or TASK=Kind,...")->capture_default_str();
  train_cmd->add_option("--select", train.select, "ERT/RFE or TASK=ERT,...");
  train_cmd->add_option("--top-n", train.top_n)->capture_default_str();
  train_cmd->add_option("--embeddings", train.embeddings);
  train_cmd->add_flag("--binarize", train.binarize,
                      "Train tree models as classifiers on F > 0.5");
  AddCommon(train_cmd, &common);

  AnswerArgs answer;
  auto* answer_cmd = app.add_subcommand("answer", "Select, compose and run a pipeline");
  answer_cmd->add_option("--question", answer.question)->required();
  answer_cmd->add_option("--model", answer.model_dir, "Directory written by train")
      ->required();
  answer_cmd->add_option("--registry", answer.registries)->required();
  answer_cmd->add_option("--goal", answer.goal)->capture_default_str();
  answer_cmd->add_option("--k", answer.k, "Top-k per task, e.g. NED=3");
  answer_cmd->add_flag("--fallback", answer.fallback,
                       "Try the next candidate when a task returns nothing");
  AddCommon(answer_cmd, &common);

  CLI11_PARSE(app, argc, argv);
  try {
    if (synth_cmd->parsed()) return RunSynth(synth, common);
    if (extract_cmd->parsed()) return RunExtract(extract, common);
    if (matrix_cmd->parsed()) return RunMatrix(matrix, common);
    if (experiment_cmd->parsed()) {
      experiment.seed_given = experiment_cmd->count("--seed") > 0;
      return RunExperimentCommand(experiment, common);
    }
    if (select_cmd->parsed()) return RunSelect(select, common);
    if (train_cmd->parsed()) return RunTrain(train, common);
    if (answer_cmd->parsed()) return RunAnswer(answer, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
