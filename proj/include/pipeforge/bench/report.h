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


#ifndef PIPEFORGE_BENCH_REPORT_H_
#define PIPEFORGE_BENCH_REPORT_H_

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipeforge/bench/experiment.h"

namespace pipeforge::bench {

struct SettingResult {
  ExperimentSetting setting;
  std::string registry_scenario;
  std::map<QATask, size_t> registry_counts;
  EvaluationResult evaluation;
};

// value / max; 0 / 0 reads as 1.
double Normalized(double value, double max);
// min / value; 0 / 0 reads as 1.
double InverseNormalized(double value, double min);

struct NormalizedRow {
  std::string setting;
  QATask task = QATask::kNED;
  std::array<double, 3> top{};  // predicted top-1/2/3 over the best setting
  double inv_features = 1.0;    // fewest selected features over this one
  double inv_time = 1.0;        // fastest training+scoring over this one
};

// Per task, compares every setting against the others.
std::vector<NormalizedRow> NormalizeResults(const std::vector<SettingResult>& results);

// All timing lives in the last column (train_score_ms / inv_time) or in
// "*_ms" keys, so byte comparisons can drop it.
void WriteFoldsCsv(std::ostream& out, const std::vector<SettingResult>& results);
void WriteSummaryCsv(std::ostream& out, const std::vector<SettingResult>& results);
void WriteNormalizedCsv(std::ostream& out, const std::vector<NormalizedRow>& rows);
nlohmann::json AggregateJson(const std::vector<SettingResult>& results);

// folds.csv, summary.csv, aggregate.json, normalized.csv and
// rankings/<setting>_fold<NN>.csv for settings with feature selection.
void WriteResultsDirectory(const std::filesystem::path& dir,
                           const std::vector<SettingResult>& results);

}  // namespace pipeforge::bench

#endif  // PIPEFORGE_BENCH_REPORT_H_
