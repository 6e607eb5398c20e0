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

#include "pipeforge/core/performance_matrix.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <spdlog/spdlog.h>

#include "pipeforge/core/csv.h"
#include "pipeforge/core/errors.h"

namespace pipeforge {

std::string FormatScore(double value) {
  char buf[64];
  auto [end, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
  std::string out(buf, end);
  size_t dot = out.find('.');
  if (dot == std::string::npos) {
    out += '.';
    dot = out.size() - 1;
  }
  while (out.size() - dot - 1 < 4) out += '0';
  return out;
}

void PerformanceMatrix::Set(const std::string& question_id,
                            const std::string& component_id, double f_score) {
  if (!(f_score >= 0.0 && f_score <= 1.0)) {
    throw RangeError("f-score outside [0,1] for (" + question_id + ", " +
                     component_id + ")");
  }
  entries_[{question_id, component_id}] = f_score;
}

std::optional<double> PerformanceMatrix::Find(
    const std::string& question_id, const std::string& component_id) const {
  auto it = entries_.find({question_id, component_id});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

double PerformanceMatrix::ValueOrZero(const std::string& question_id,
                                      const std::string& component_id) const {
  if (auto v = Find(question_id, component_id)) return *v;
  spdlog::warn("no f-score for ({}, {}); treating as 0", question_id,
               component_id);
  return 0.0;
}

std::optional<double> PerformanceMatrix::MeanFor(
    const std::string& component_id) const {
  double sum = 0.0;
  size_t n = 0;
  for (const auto& [key, f] : entries_) {
    if (key.second == component_id) {
      sum += f;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::vector<std::string> PerformanceMatrix::QuestionIds() const {
  std::set<std::string> ids;
  for (const auto& [key, f] : entries_) ids.insert(key.first);
  return {ids.begin(), ids.end()};
}

std::vector<std::string> PerformanceMatrix::ComponentIds() const {
  std::set<std::string> ids;
  for (const auto& [key, f] : entries_) ids.insert(key.second);
  return {ids.begin(), ids.end()};
}

void PerformanceMatrix::WriteCsv(std::ostream& out) const {
  out << "question_id,component_id,f_score\n";
  for (const auto& [key, f] : entries_) {
    csv::WriteRow(out, {key.first, key.second, FormatScore(f)});
  }
}

void PerformanceMatrix::SaveCsv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  WriteCsv(out);
}

PerformanceMatrix PerformanceMatrix::ReadCsv(std::istream& in) {
  std::vector<std::string> row;
  if (!csv::ReadRow(in, &row) ||
      row != std::vector<std::string>{"question_id", "component_id",
                                      "f_score"}) {
    throw ParseError(
        "performance matrix must start with header "
        "question_id,component_id,f_score");
  }
  PerformanceMatrix matrix;
  size_t line = 1;
  while (csv::ReadRow(in, &row)) {
    ++line;
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != 3) {
      throw ParseError("line " + std::to_string(line) + ": expected 3 fields");
    }
    double f = 0.0;
    const std::string& text = row[2];
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), f);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError("line " + std::to_string(line) + ": bad f_score '" +
                       text + "'");
    }
    matrix.Set(row[0], row[1], f);
  }
  return matrix;
}

PerformanceMatrix PerformanceMatrix::LoadCsv(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  return ReadCsv(in);
}

}  // namespace pipeforge
