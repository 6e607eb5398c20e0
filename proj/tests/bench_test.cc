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


#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "pipeforge/bench/experiment.h"
#include "pipeforge/bench/report.h"
#include "pipeforge/bench/runner.h"
#include "pipeforge/bench/synthetic.h"
#include "pipeforge/components/adapters.h"
#include "pipeforge/components/scoring.h"
#include "pipeforge/core/dataset.h"
#include "pipeforge/core/errors.h"

namespace pipeforge::bench {
namespace {

namespace fs = std::filesystem;

SyntheticCorpus Corpus(size_t n, uint64_t seed = 42, size_t dim = 0) {
  SyntheticSpec spec;
  spec.n_questions = n;
  spec.seed = seed;
  spec.embedding_dim = dim;
  return GenerateSynthetic(spec);
}

TEST(SyntheticTest, DeterministicAndValid) {
  const auto a = Corpus(300, 7, 4);
  const auto b = Corpus(300, 7, 4);
  EXPECT_EQ(a.questions, b.questions);
  EXPECT_EQ(a.embeddings, b.embeddings);
  EXPECT_NE(Corpus(300, 8).questions, a.questions);
  EXPECT_TRUE(ValidateDataset(a.questions).empty());
  size_t with_class = 0;
  for (const auto& q : a.questions) {
    EXPECT_NE(q.GoldFor(QATask::kNED), nullptr);
    EXPECT_NE(q.GoldFor(QATask::kRL), nullptr);
    EXPECT_NE(q.GoldFor(QATask::kQB), nullptr);
    with_class += q.GoldFor(QATask::kCL) != nullptr;
  }
  EXPECT_GT(with_class, 0u);
  EXPECT_LT(with_class, a.questions.size());
}

TEST(SyntheticTest, EmbeddingsReloadExactly) {
  const auto c = Corpus(50, 3, 6);
  const auto path = fs::temp_directory_path() / "pipeforge_bench_vectors.txt";
  SaveEmbeddings(path, c.embeddings);
  const auto table = features::LoadEmbeddings(path);
  const auto direct = c.Table();
  EXPECT_EQ(table.size(), direct.size());
  for (const auto& [token, vec] : c.embeddings) {
    const auto got = table.Find(token);
    ASSERT_EQ(got.size(), vec.size());
    for (size_t i = 0; i < vec.size(); ++i) EXPECT_EQ(got[i], vec[i]);
  }
  fs::remove(path);
}

TEST(SyntheticTest, PresetShapes) {
  auto count = [](ComponentPreset p) {
    components::Registry r("x");
    for (auto& c : PresetComponents(p, 1)) r.Register(c);
    return r.CountsLabel();
  };
  EXPECT_EQ(count(ComponentPreset::kBaseline), "NED=18 RL=5 CL=2 QB=2");
  EXPECT_EQ(count(ComponentPreset::kNewComponents), "NED=3 RL=2");
  EXPECT_EQ(count(ComponentPreset::kPlantedNed), "NED=6");
  EXPECT_EQ(ComponentPresetFromName("planted-ned"), ComponentPreset::kPlantedNed);
}

TEST(SyntheticTest, FalconCalibration) {
  // 0.73 +- 0.02 over 10k draws.
  const auto questions = Corpus(10000, 11).questions;
  for (const auto& c : PresetComponents(ComponentPreset::kNewComponents, 11)) {
    if (c.id != "falcon-ned") continue;
    double sum = 0;
    for (const auto& q : questions) {
      const auto out = components::Invoke(c, q, 11);
      sum += components::MicroFScore(out, *q.GoldFor(QATask::kNED));
    }
    EXPECT_NEAR(sum / questions.size(), 0.73, 0.02);
  }
}

TEST(ReportTest, Normalization) {
  EXPECT_DOUBLE_EQ(Normalized(5, 10), 0.5);
  EXPECT_DOUBLE_EQ(Normalized(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(InverseNormalized(20, 10), 0.5);
  EXPECT_DOUBLE_EQ(InverseNormalized(0, 0), 1.0);
}

TEST(SettingsTest, NamedSettings) {
  const auto names = SettingNames();
  EXPECT_EQ(names.size(), 8u);
  for (const auto& n : names) EXPECT_EQ(NamedSetting(n).name, n);
  EXPECT_THROW(NamedSetting("nope"), ConfigError);
  const auto ml = NamedSetting("FS+NC+ML");
  EXPECT_EQ(ml.For(QATask::kNED).model, learners::ModelKind::kRandomForest);
  EXPECT_EQ(ml.For(QATask::kQB).model, learners::ModelKind::kLogisticRegression);
  EXPECT_EQ(ml.For(QATask::kNED).features, features::FeatureSet::kCF2);
  EXPECT_TRUE(ml.For(QATask::kNED).selection.has_value());
  EXPECT_EQ(NamedSetting("Baseline").For(QATask::kRL).features, features::FeatureSet::kCF1);
}

TEST(SettingsTest, FromJsonOverridesTasks) {
  const auto s = SettingFromJson(
      {{"base", "Baseline"},
       {"name", "custom"},
       {"tasks", {{"NED", {{"features", "CF2"}, {"model", "RF"}, {"selection", "RFE"}}}}}},
      5, 4);
  EXPECT_EQ(s.name, "custom");
  EXPECT_EQ(s.For(QATask::kNED).model, learners::ModelKind::kRandomForest);
  EXPECT_EQ(s.For(QATask::kNED).selection, selection::RankingMethod::kRfe);
  EXPECT_EQ(s.For(QATask::kRL).model, learners::ModelKind::kLogisticRegression);
  EXPECT_THROW(SettingFromJson({{"base", "Baseline"}, {"tasks", {{"NED", {{"model", "SVM"}}}}}},
                               5, 4),
               ParseError);
}

TEST(ExperimentTest, BalanceEqualizesClasses) {
  const auto c = Corpus(300);
  components::Registry r("p");
  for (auto& comp : PresetComponents(ComponentPreset::kPlantedNed, 1)) r.Register(comp);
  const auto m = components::BuildMatrix(r, c.questions, 1, 1);
  const auto balanced = BalanceByAnswerable(c.questions, m, r, QATask::kNED, 3);
  size_t yes = 0;
  for (const auto& q : balanced) yes += IsAnswerable(q.id, r.IdsFor(QATask::kNED), m);
  EXPECT_EQ(2 * yes, balanced.size());
  EXPECT_EQ(BalanceByAnswerable(c.questions, m, r, QATask::kNED, 3), balanced);
}

TEST(ExperimentTest, EmbeddingSettingWithoutVectorsFailsEarly) {
  ExperimentSetting s = NamedSetting("Baseline");
  s.tasks[QATask::kNED].features = features::FeatureSet::kCF3;
  auto extractor = std::make_shared<const features::FeatureExtractor>(
      features::FeatureExtractor::Default());
  EXPECT_THROW(LearnedRanker(s, extractor), ConfigError);
}

TEST(RunnerTest, ParseErrors) {
  EXPECT_THROW(ParseExperimentFile(nlohmann::json::object(), "."), ConfigError);
  EXPECT_THROW(ParseExperimentFile({{"dataset", "a.json"}, {"synthetic", {}}}, "."),
               ConfigError);
  const auto f = ParseExperimentFile(
      {{"dataset", "q.json"}, {"registry", "r.json"}, {"seed", 3}, {"settings", {"NC"}}},
      "/data", 9);
  EXPECT_EQ(f.seed, 9u);
  EXPECT_EQ(*f.dataset, fs::path("/data/q.json"));
  ASSERT_EQ(f.settings.size(), 1u);
  EXPECT_EQ(f.settings[0].name, "NC");
}

TEST(RunnerTest, SmallSyntheticRunWritesReport) {
  const auto dir = fs::temp_directory_path() / "pipeforge_runner_small";
  fs::remove_all(dir);
  const auto file = ParseExperimentFile({{"synthetic", {{"n_questions", 120}, {"embedding_dim", 0}}},
                                         {"folds", 3},
                                         {"settings", {"Baseline", "FS"}}},
                                        dir);
  const auto results = RunExperiment(file, dir / "out", 1);
  ASSERT_EQ(results.size(), 2u);
  for (const char* name : {"matrix.csv", "config.json", "folds.csv", "summary.csv",
                           "normalized.csv", "aggregate.json"}) {
    EXPECT_TRUE(fs::exists(dir / "out" / name)) << name;
  }
  EXPECT_TRUE(fs::exists(dir / "out" / "rankings"));
  const auto agg = ReadJsonFile(dir / "out" / "aggregate.json");
  EXPECT_FALSE(agg.empty());
  fs::remove_all(dir);
}

}  // namespace
}  // namespace pipeforge::bench
