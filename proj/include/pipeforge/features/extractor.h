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

#ifndef PIPEFORGE_FEATURES_EXTRACTOR_H_
#define PIPEFORGE_FEATURES_EXTRACTOR_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pipeforge/core/task.h"
#include "pipeforge/core/types.h"
#include "pipeforge/features/embeddings.h"
#include "pipeforge/features/lexicons.h"
#include "pipeforge/features/tagger.h"

namespace pipeforge::features {

// Feature configurations:
//   CF1  question type (8) | answer type (5) | word count | 14 POS counts = 28
//   CF2  CF1 | 6 character-case dims | 17 entity-type counts = 51
//        (34 when extracting for NED: entity types are dropped)
//   CF3  mean embedding of all word tokens
//   CF4  per-token embeddings, padded/truncated to max_tokens
//   CF5  CF3 after stop-word removal
//   CF6  CF1 | CF3
enum class FeatureSet { kCF1, kCF2, kCF3, kCF4, kCF5, kCF6 };

std::string_view FeatureSetName(FeatureSet set);
FeatureSet FeatureSetFromName(std::string_view name);
bool NeedsEmbeddings(FeatureSet set);

struct FeatureConfig {
  FeatureSet variant = FeatureSet::kCF1;
  std::optional<std::filesystem::path> embedding_source;
  size_t max_tokens = 30;
  QATask for_task = QATask::kNED;

  // e.g. "CF2/NED" or "CF4/RL/30".
  std::string Identity() const;

  // Throws ConfigError when CF3-CF6 lack an embedding source or
  // max_tokens is zero.
  void Validate() const;
};

// Dimensionality as a pure function of the configuration.
size_t FeatureDimension(FeatureSet set, QATask task, size_t embedding_dim,
                        size_t max_tokens);

struct FeatureVector {
  std::string config;
  std::vector<std::string> names;
  std::vector<double> values;

  size_t size() const { return values.size(); }
  // Value by name; throws DimensionError if absent.
  double at(std::string_view name) const;
  // Projection onto `names` in the given order.
  FeatureVector Select(const std::vector<std::string>& names) const;
};

// Intermediate linguistic analysis of one question.
struct QuestionAnalysis {
  std::vector<TaggedToken> tagged;
  std::vector<std::string> words;  // non-punctuation tokens, in order
  QuestionType question_type = QuestionType::kGiveList;
  AnswerType answer_type = AnswerType::kResource;
};

// Stateless apart from immutable lexicons and the optional table, so one
// instance can serve concurrent callers.
class FeatureExtractor {
 public:
  FeatureExtractor(StopWords stop_words, Gazetteer gazetteer,
                   std::shared_ptr<const EmbeddingTable> table = nullptr);

  // Bundled stop words and gazetteer.
  static FeatureExtractor Default(
      std::shared_ptr<const EmbeddingTable> table = nullptr);

  QuestionAnalysis Analyze(const Question& question) const;

  // Throws ConfigError when the configuration needs embeddings and none
  // are loaded.
  FeatureVector Extract(const Question& question,
                        const FeatureConfig& config) const;

  std::vector<std::string> FeatureNames(const FeatureConfig& config) const;

  const EmbeddingTable* embeddings() const { return table_.get(); }
  const StopWords& stop_words() const { return stop_words_; }
  const Gazetteer& gazetteer() const { return gazetteer_; }

 private:
  void AppendBasic(const QuestionAnalysis& a, std::vector<double>* out) const;
  void AppendCase(const QuestionAnalysis& a, std::vector<double>* out) const;
  void AppendEntityTypes(const QuestionAnalysis& a,
                         std::vector<double>* out) const;
  void AppendMeanEmbedding(const std::vector<std::string>& words,
                           std::vector<double>* out) const;
  void AppendConcatEmbedding(const std::vector<std::string>& words,
                             size_t max_tokens, std::vector<double>* out) const;
  size_t EmbeddingDimension(const FeatureConfig& config) const;

  StopWords stop_words_;
  Gazetteer gazetteer_;
  std::shared_ptr<const EmbeddingTable> table_;
};

}  // namespace pipeforge::features

#endif  // PIPEFORGE_FEATURES_EXTRACTOR_H_
