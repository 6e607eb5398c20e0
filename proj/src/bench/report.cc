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


#include "pipeforge/bench/report.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <ostream>

#include <fmt/format.h>

#include "pipeforge/core/csv.h"
#include "pipeforge/core/dataset.h"
#include "pipeforge/core/errors.h"
#include "pipeforge/core/performance_matrix.h"

namespace pipeforge::bench {
namespace {

std::string Ms(double ms) { return fmt::format("{:.3f}", ms); }

std::string FileSafe(std::string_view name) {
  std::string out;
  for (char c : name) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' ||
                      c == '_' || c == '+';
    out += keep ? c : '_';
  }
  return out;
}

std::ofstream OpenOut(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

}  // namespace

double Normalized(double value, double max) {
  if (max == 0.0) return value == 0.0 ? 1.0 : 0.0;
  return value / max;
}

double InverseNormalized(double value, double min) {
  if (value == 0.0) return 1.0;
  return min / value;
}

std::vector<NormalizedRow> NormalizeResults(const std::vector<SettingResult>& results) {
  std::map<QATask, std::array<double, 3>> best_top;
  std::map<QATask, double> fewest_features;
  double fastest = std::numeric_limits<double>::infinity();
  for (const auto& r : results) {
    fastest = std::min(fastest, r.evaluation.aggregate.train_score_ms);
    for (const auto& [task, a] : r.evaluation.aggregate.tasks) {
      auto [it, fresh] = best_top.try_emplace(task, a.top);
      auto [ft, ffresh] = fewest_features.try_emplace(task, a.selected_features);
      for (size_t i = 0; i < 3; ++i) it->second[i] = std::max(it->second[i], a.top[i]);
      ft->second = std::min(ft->second, a.selected_features);
    }
  }
  std::vector<NormalizedRow> rows;
  for (const auto& r : results) {
    for (const auto& [task, a] : r.evaluation.aggregate.tasks) {
      NormalizedRow row;
      row.setting = r.setting.name;
      row.task = task;
      for (size_t i = 0; i < 3; ++i) row.top[i] = Normalized(a.top[i], best_top[task][i]);
      row.inv_features = InverseNormalized(a.selected_features, fewest_features[task]);
      row.inv_time = InverseNormalized(r.evaluation.aggregate.train_score_ms, fastest);
      rows.push_back(row);
    }
  }
  return rows;
}

void WriteFoldsCsv(std::ostream& out, const std::vector<SettingResult>& results) {
  csv::WriteRow(out, {"setting", "registry", "fold", "task", "total_questions", "answerable",
                      "top1", "top2", "top3", "selected_features", "train_score_ms"});
  for (const auto& r : results) {
    for (const FoldReport& f : r.evaluation.folds) {
      for (const auto& [task, answerable] : f.answerable) {
        const auto& top = f.top.at(task);
        csv::WriteRow(out, {r.setting.name, r.registry_scenario, std::to_string(f.fold),
                            std::string(TaskName(task)), std::to_string(f.total_questions),
                            std::to_string(answerable), std::to_string(top[0]),
                            std::to_string(top[1]), std::to_string(top[2]),
                            std::to_string(f.selected_features.at(task)),
                            Ms(f.train_score_ms)});
      }
    }
  }
}

void WriteSummaryCsv(std::ostream& out, const std::vector<SettingResult>& results) {
  csv::WriteRow(out, {"setting", "registry", "task", "total_questions", "answerable", "top1",
                      "top2", "top3", "selected_features"});
  for (const auto& r : results) {
    const Aggregate& a = r.evaluation.aggregate;
    for (const auto& [task, t] : a.tasks) {
      csv::WriteRow(out, {r.setting.name, r.registry_scenario, std::string(TaskName(task)),
                          FormatScore(a.total_questions), FormatScore(t.answerable),
                          FormatScore(t.top[0]), FormatScore(t.top[1]), FormatScore(t.top[2]),
                          FormatScore(t.selected_features)});
    }
  }
}

void WriteNormalizedCsv(std::ostream& out, const std::vector<NormalizedRow>& rows) {
  csv::WriteRow(out, {"setting", "task", "top1", "top2", "top3", "inv_features", "inv_time"});
  for (const auto& row : rows) {
    csv::WriteRow(out, {row.setting, std::string(TaskName(row.task)), FormatScore(row.top[0]),
                        FormatScore(row.top[1]), FormatScore(row.top[2]),
                        FormatScore(row.inv_features), FormatScore(row.inv_time)});
  }
}

nlohmann::json AggregateJson(const std::vector<SettingResult>& results) {
  nlohmann::json settings = nlohmann::json::array();
  for (const auto& r : results) {
    const Aggregate& a = r.evaluation.aggregate;
    nlohmann::json tasks = nlohmann::json::object();
    for (const auto& [task, t] : a.tasks) {
      tasks[std::string(TaskName(task))] = {{"answerable", t.answerable},
                                            {"top1", t.top[0]},
                                            {"top2", t.top[1]},
                                            {"top3", t.top[2]},
                                            {"selected_features", t.selected_features}};
    }
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [task, n] : r.registry_counts) counts[std::string(TaskName(task))] = n;
    settings.push_back({{"name", r.setting.name},
                        {"registry", r.registry_scenario},
                        {"registry_counts", counts},
                        {"folds", r.evaluation.folds.size()},
                        {"total_questions", a.total_questions},
                        {"tasks", tasks},
                        {"train_score_ms", a.train_score_ms}});
  }
  return {{"settings", settings}};
}

void WriteResultsDirectory(const std::filesystem::path& dir,
                           const std::vector<SettingResult>& results) {
  std::filesystem::create_directories(dir / "rankings");
  {
    auto out = OpenOut(dir / "folds.csv");
    WriteFoldsCsv(out, results);
  }
  {
    auto out = OpenOut(dir / "summary.csv");
    WriteSummaryCsv(out, results);
  }
  {
    auto out = OpenOut(dir / "normalized.csv");
    WriteNormalizedCsv(out, NormalizeResults(results));
  }
  WriteJsonFile(dir / "aggregate.json", AggregateJson(results));
  for (const auto& r : results) {
    const auto& per_fold = r.evaluation.rankings;
    for (size_t f = 0; f < per_fold.size(); ++f) {
      if (per_fold[f].empty()) continue;
      auto out = OpenOut(dir / "rankings" /
                         fmt::format("{}_fold{:02d}.csv", FileSafe(r.setting.name), f));
      selection::WriteRankingCsv(out, per_fold[f]);
    }
  }
}

}  // namespace pipeforge::bench
