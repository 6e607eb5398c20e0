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


#include "pipeforge/bench/runner.h"

#include <spdlog/spdlog.h>

#include "pipeforge/bench/synthetic.h"
#include "pipeforge/components/scoring.h"
#include "pipeforge/core/dataset.h"
#include "pipeforge/core/errors.h"

namespace pipeforge::bench {
namespace {

std::optional<std::filesystem::path> PathField(const nlohmann::json& j, const char* key,
                                               const std::filesystem::path& base) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  std::filesystem::path p = j.at(key).get<std::string>();
  return p.is_absolute() ? p : base / p;
}

nlohmann::json PathJson(const std::optional<std::filesystem::path>& p) {
  return p ? nlohmann::json(p->string()) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json ExperimentFile::ToJson() const {
  nlohmann::json settings_json = nlohmann::json::array();
  for (const auto& s : settings) settings_json.push_back(s.ToJson());
  return {{"dataset", PathJson(dataset)},
          {"synthetic", synthetic ? *synthetic : nlohmann::json(nullptr)},
          {"registry", PathJson(registry)},
          {"new_components", PathJson(new_components)},
          {"matrix", PathJson(matrix)},
          {"embeddings", PathJson(embeddings)},
          {"folds", folds},
          {"seed", seed},
          {"balance", balance ? nlohmann::json(std::string(TaskName(*balance)))
                              : nlohmann::json(nullptr)},
          {"settings", settings_json}};
}

ExperimentFile ParseExperimentFile(const nlohmann::json& j,
                                   const std::filesystem::path& base_dir,
                                   std::optional<uint64_t> seed) {
  try {
    ExperimentFile f;
    f.dataset = PathField(j, "dataset", base_dir);
    if (j.contains("synthetic")) f.synthetic = j.at("synthetic");
    if (f.dataset.has_value() == f.synthetic.has_value()) {
      throw ConfigError("experiment file needs exactly one of \"dataset\" and \"synthetic\"");
    }
    f.registry = PathField(j, "registry", base_dir);
    f.new_components = PathField(j, "new_components", base_dir);
    f.matrix = PathField(j, "matrix", base_dir);
    f.embeddings = PathField(j, "embeddings", base_dir);
    if (f.dataset && !f.registry) throw ConfigError("experiment file needs a \"registry\"");
    f.folds = j.value("folds", 10);
    f.seed = seed ? *seed : j.value("seed", uint64_t{42});
    if (j.contains("balance") && !j.at("balance").is_null()) {
      f.balance = TaskFromName(j.at("balance").get<std::string>());
    }
    if (j.contains("settings")) {
      for (const auto& s : j.at("settings")) {
        f.settings.push_back(SettingFromJson(s, f.seed, f.folds));
      }
    } else {
      for (const auto& name : SettingNames()) {
        f.settings.push_back(NamedSetting(name, f.seed, f.folds));
      }
    }
    if (f.settings.empty()) throw ConfigError("experiment file lists no settings");
    for (auto& s : f.settings) {
      if (!s.embeddings) s.embeddings = f.embeddings;
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed experiment file: ") + e.what());
  }
}

ExperimentFile LoadExperimentFile(const std::filesystem::path& path,
                                  std::optional<uint64_t> seed) {
  return ParseExperimentFile(ReadJsonFile(path), path.parent_path(), seed);
}

std::vector<SettingResult> RunExperiment(const ExperimentFile& file,
                                         const std::filesystem::path& out_dir, int jobs) {
  std::filesystem::create_directories(out_dir);
  std::vector<Question> questions;
  components::Registry baseline;
  std::optional<components::Registry> extra;
  std::shared_ptr<const features::EmbeddingTable> table;

  if (file.synthetic) {
    SyntheticSpec spec;
    spec.n_questions = file.synthetic->value("n_questions", size_t{1000});
    spec.seed = file.synthetic->value("seed", file.seed);
    spec.embedding_dim = file.synthetic->value("embedding_dim", size_t{16});
    SyntheticCorpus corpus = GenerateSynthetic(spec);
    questions = std::move(corpus.questions);
    if (spec.embedding_dim > 0 && !file.embeddings) {
      table = std::make_shared<const features::EmbeddingTable>(corpus.Table());
    }
    baseline = components::Registry(std::string(kBaselineScenario));
    for (auto& c : PresetComponents(ComponentPreset::kBaseline, spec.seed)) baseline.Register(c);
    components::Registry fresh("new-components");
    for (auto& c : PresetComponents(ComponentPreset::kNewComponents, spec.seed)) fresh.Register(c);
    extra = std::move(fresh);
  } else {
    questions = LoadDataset(*file.dataset);
  }
  if (file.registry) baseline = components::Registry::Load(*file.registry);
  if (file.new_components) extra = components::Registry::Load(*file.new_components);
  if (file.embeddings) {
    table = std::make_shared<const features::EmbeddingTable>(
        features::LoadEmbeddings(*file.embeddings));
  }
  auto extractor =
      std::make_shared<const features::FeatureExtractor>(features::FeatureExtractor::Default(table));

  const components::Registry all =
      extra ? components::Merge(baseline, *extra, "all") : baseline;
  PerformanceMatrix matrix = file.matrix ? PerformanceMatrix::LoadCsv(*file.matrix)
                                         : components::BuildMatrix(all, questions, file.seed,
                                                                   std::max(jobs, 1));
  matrix.SaveCsv(out_dir / "matrix.csv");
  if (file.balance) {
    questions = BalanceByAnswerable(questions, matrix, baseline, *file.balance, file.seed);
    spdlog::info("balanced on {}: {} questions", TaskName(*file.balance), questions.size());
  }

  nlohmann::json config = file.ToJson();
  config["jobs"] = jobs;
  config["questions"] = questions.size();
  WriteJsonFile(out_dir / "config.json", config);

  std::vector<SettingResult> results;
  for (const ExperimentSetting& setting : file.settings) {
    try {
      const components::Registry registry = ScenarioRegistry(
          setting.registry, baseline, extra ? &*extra : nullptr, matrix);
      spdlog::info("setting {}: registry {} ({})", setting.name, registry.scenario(),
                   registry.CountsLabel());
      SettingResult r;
      r.setting = setting;
      r.registry_scenario = registry.scenario();
      r.registry_counts = registry.Counts();
      r.evaluation = EvaluateSetting(setting, questions, matrix, registry, extractor, jobs);
      results.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw Error("setting '" + setting.name + "' failed: " + e.what());
    }
  }
  WriteResultsDirectory(out_dir, results);
  return results;
}

}  // namespace pipeforge::bench
