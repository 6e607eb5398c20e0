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

#ifndef PIPEFORGE_CORE_DATASET_H_
#define PIPEFORGE_CORE_DATASET_H_

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/types.h"

namespace pipeforge {

enum class ViolationKind {
  kDuplicateId,
  kEmptyId,
  kEmptyText,
  kPosMismatch,
  kEmptyGold,
  kRelativeIri,
};

struct Violation {
  size_t index = 0;  // position of the offending question in the input
  std::string question_id;
  ViolationKind kind = ViolationKind::kEmptyText;
  std::string message;
};

std::string_view ViolationKindName(ViolationKind kind);

// Checks every Question invariant and id uniqueness. Never throws and never
// mutates the input; an empty result means the dataset is valid.
std::vector<Violation> ValidateDataset(const std::vector<Question>& questions);

// Dataset JSON schema:
//   [{"id", "text", "gold": {"NED": [...], "RL": [...], "CL": [...],
//     "QB": [...]}, "pos": [["What", "WP"], ...]}]
// "gold" and "pos" are optional. QB gold entries are triple patterns and are
// canonicalized on read.
nlohmann::json QuestionToJson(const Question& question);
Question QuestionFromJson(const nlohmann::json& j);

nlohmann::json ComponentToJson(const Component& component);
Component ComponentFromJson(const nlohmann::json& j);

// Parse only; no validation.
std::vector<Question> ReadQuestions(const std::filesystem::path& path);
void WriteQuestions(const std::filesystem::path& path,
                    const std::vector<Question>& questions);

// Reads and validates; throws ValidationError listing every violation with
// its row index.
std::vector<Question> LoadDataset(const std::filesystem::path& path);

nlohmann::json ReadJsonFile(const std::filesystem::path& path);
void WriteJsonFile(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace pipeforge

#endif  // PIPEFORGE_CORE_DATASET_H_
