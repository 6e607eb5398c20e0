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

#ifndef PIPEFORGE_CORE_PERFORMANCE_MATRIX_H_
#define PIPEFORGE_CORE_PERFORMANCE_MATRIX_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pipeforge {

// Per (question, component) micro F-score. Absent entries mean the
// component was never run on the question.
class PerformanceMatrix {
 public:
  using Key = std::pair<std::string, std::string>;  // (question, component)

  // Throws RangeError unless 0 <= f_score <= 1.
  void Set(const std::string& question_id, const std::string& component_id,
           double f_score);

  std::optional<double> Find(const std::string& question_id,
                             const std::string& component_id) const;

  // Missing entries read as 0.0 and log a warning.
  double ValueOrZero(const std::string& question_id,
                     const std::string& component_id) const;

  bool Contains(const std::string& question_id,
                const std::string& component_id) const {
    return entries_.count({question_id, component_id}) > 0;
  }

  // Mean over the evaluated questions of a component; nullopt if none.
  std::optional<double> MeanFor(const std::string& component_id) const;

  std::vector<std::string> QuestionIds() const;
  std::vector<std::string> ComponentIds() const;

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<Key, double>& entries() const { return entries_; }

  // CSV with header `question_id,component_id,f_score`, rows in key order.
  void WriteCsv(std::ostream& out) const;
  void SaveCsv(const std::filesystem::path& path) const;
  static PerformanceMatrix ReadCsv(std::istream& in);
  static PerformanceMatrix LoadCsv(const std::filesystem::path& path);

  bool operator==(const PerformanceMatrix&) const = default;

 private:
  std::map<Key, double> entries_;
};

// Shortest round-trip fixed-point rendering with at least four fractional
// digits, e.g. 1 -> "1.0000", 0.123456789 -> "0.123456789".
std::string FormatScore(double value);

}  // namespace pipeforge

#endif  // PIPEFORGE_CORE_PERFORMANCE_MATRIX_H_
