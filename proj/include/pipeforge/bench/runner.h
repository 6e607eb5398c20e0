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


#ifndef PIPEFORGE_BENCH_RUNNER_H_
#define PIPEFORGE_BENCH_RUNNER_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "pipeforge/bench/experiment.h"
#include "pipeforge/bench/report.h"

namespace pipeforge::bench {

// Experiment file, relative paths resolved against its directory:
//   {"dataset": "questions.json"          (or "synthetic": {"n_questions",
//                                           "seed", "embedding_dim"}),
//    "registry": "baseline.json", "new_components": "new.json",
//    "matrix": "matrix.csv", "embeddings": "vectors.txt",
//    "folds": 10, "seed": 42, "balance": "NED",
//    "settings": ["Baseline", "FS", {"name": ..., "base": ..., ...}]}
// Only the data source is required; settings default to every named one.
// With "synthetic", registries default to the bundled presets.
struct ExperimentFile {
  std::optional<std::filesystem::path> dataset;
  std::optional<nlohmann::json> synthetic;
  std::optional<std::filesystem::path> registry;
  std::optional<std::filesystem::path> new_components;
  std::optional<std::filesystem::path> matrix;
  std::optional<std::filesystem::path> embeddings;
  int folds = 10;
  uint64_t seed = 42;
  std::optional<QATask> balance;
  std::vector<ExperimentSetting> settings;

  // Fully resolved form, echoed next to the results.
  nlohmann::json ToJson() const;
};

// `seed` overrides the file's seed when set.
ExperimentFile ParseExperimentFile(const nlohmann::json& j,
                                   const std::filesystem::path& base_dir,
                                   std::optional<uint64_t> seed = std::nullopt);
ExperimentFile LoadExperimentFile(const std::filesystem::path& path,
                                  std::optional<uint64_t> seed = std::nullopt);

// Evaluates every setting and writes matrix.csv, config.json and the
// report files under `out_dir`. A failing setting aborts the run with an
// Error naming it.
std::vector<SettingResult> RunExperiment(const ExperimentFile& file,
                                         const std::filesystem::path& out_dir, int jobs = 1);

}  // namespace pipeforge::bench

#endif  // PIPEFORGE_BENCH_RUNNER_H_
