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

#include "pipeforge/features/extractor.h"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "pipeforge/core/errors.h"
#include "pipeforge/features/tokenizer.h"

namespace pipeforge::features {
namespace {

constexpr size_t kBasicDims = kQuestionTypeCount + kAnswerTypeCount + 1 +
                              kCountedTags.size();  // 28
constexpr size_t kCaseDims = 6;

constexpr std::array<std::string_view, kCaseDims> kCaseNames = {
    "case_noninitial_capitalized", "case_all_caps",     "case_mixed",
    "case_first_capitalized",      "case_digit_tokens", "case_longest_capitalized_run"};

bool HasUpper(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isupper(c); });
}
bool HasLower(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::islower(c); });
}
bool Capitalized(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}
bool AllCaps(std::string_view s) {
  const auto letters = std::count_if(s.begin(), s.end(), [](unsigned char c) {
    return std::isalpha(c);
  });
  return letters >= 2 && !HasLower(s);
}
bool MixedCase(std::string_view s) {
  return s.size() > 1 && HasLower(s) && HasUpper(s.substr(1));
}
bool HasDigit(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool IncludesEntityTypes(FeatureSet set, QATask task) {
  return set == FeatureSet::kCF2 && task != QATask::kNED && task != QATask::kNER;
}

}  // namespace

std::string_view FeatureSetName(FeatureSet set) {
  switch (set) {
    case FeatureSet::kCF1: return "CF1";
    case FeatureSet::kCF2: return "CF2";
    case FeatureSet::kCF3: return "CF3";
    case FeatureSet::kCF4: return "CF4";
    case FeatureSet::kCF5: return "CF5";
    case FeatureSet::kCF6: return "CF6";
  }
  return "CF1";
}

FeatureSet FeatureSetFromName(std::string_view name) {
  for (FeatureSet s : {FeatureSet::kCF1, FeatureSet::kCF2, FeatureSet::kCF3,
                       FeatureSet::kCF4, FeatureSet::kCF5, FeatureSet::kCF6}) {
    if (ToLower(FeatureSetName(s)) == ToLower(name)) return s;
  }
  throw ParseError("unknown feature configuration '" + std::string(name) +
                   "' (expected CF1..CF6)");
}

bool NeedsEmbeddings(FeatureSet set) {
  return set != FeatureSet::kCF1 && set != FeatureSet::kCF2;
}

std::string FeatureConfig::Identity() const {
  std::string id = std::string(FeatureSetName(variant)) + "/" +
                   std::string(TaskName(for_task));
  if (variant == FeatureSet::kCF4) id += "/" + std::to_string(max_tokens);
  return id;
}

void FeatureConfig::Validate() const {
  if (NeedsEmbeddings(variant) && !embedding_source) {
    throw ConfigError(std::string(FeatureSetName(variant)) +
                      " requires an embedding source");
  }
  if (max_tokens == 0) throw ConfigError("max_tokens must be positive");
}

size_t FeatureDimension(FeatureSet set, QATask task, size_t embedding_dim,
                        size_t max_tokens) {
  switch (set) {
    case FeatureSet::kCF1:
      return kBasicDims;
    case FeatureSet::kCF2:
      return kBasicDims + kCaseDims +
             (IncludesEntityTypes(set, task) ? kEntityTypes.size() : 0);
    case FeatureSet::kCF3:
    case FeatureSet::kCF5:
      return embedding_dim;
    case FeatureSet::kCF4:
      return embedding_dim * max_tokens;
    case FeatureSet::kCF6:
      return kBasicDims + embedding_dim;
  }
  return 0;
}

double FeatureVector::at(std::string_view name) const {
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return values[i];
  }
  throw DimensionError("no feature named '" + std::string(name) + "' in " + config);
}

FeatureVector FeatureVector::Select(const std::vector<std::string>& wanted) const {
  std::unordered_map<std::string_view, size_t> index;
  for (size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  FeatureVector out;
  out.config = config;
  out.names = wanted;
  out.values.reserve(wanted.size());
  for (const std::string& name : wanted) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw DimensionError("no feature named '" + name + "' in " + config);
    }
    out.values.push_back(values[it->second]);
  }
  return out;
}

FeatureExtractor::FeatureExtractor(StopWords stop_words, Gazetteer gazetteer,
                                   std::shared_ptr<const EmbeddingTable> table)
    : stop_words_(std::move(stop_words)),
      gazetteer_(std::move(gazetteer)),
      table_(std::move(table)) {}

FeatureExtractor FeatureExtractor::Default(
    std::shared_ptr<const EmbeddingTable> table) {
  return FeatureExtractor(StopWords::Bundled(), Gazetteer::Bundled(),
                          std::move(table));
}

QuestionAnalysis FeatureExtractor::Analyze(const Question& question) const {
  QuestionAnalysis a;
  if (question.precomputed_pos) {
    std::vector<std::string> tokens, tags;
    for (const auto& [token, tag] : *question.precomputed_pos) {
      tokens.push_back(token);
      tags.push_back(tag);
    }
    a.tagged = TagTokens(tokens, tags);
  } else {
    a.tagged = TagTokens(Tokenize(question.text));
  }
  std::vector<std::string> tokens;
  for (const TaggedToken& t : a.tagged) {
    tokens.push_back(t.token);
    if (!IsPunctuation(t.token)) a.words.push_back(t.token);
  }
  a.question_type = ClassifyQuestion(tokens);
  a.answer_type = ClassifyAnswer(tokens);
  return a;
}

void FeatureExtractor::AppendBasic(const QuestionAnalysis& a,
                                   std::vector<double>* out) const {
  for (size_t i = 0; i < kQuestionTypeCount; ++i) {
    out->push_back(static_cast<size_t>(a.question_type) == i ? 1.0 : 0.0);
  }
  for (size_t i = 0; i < kAnswerTypeCount; ++i) {
    out->push_back(static_cast<size_t>(a.answer_type) == i ? 1.0 : 0.0);
  }
  out->push_back(static_cast<double>(a.words.size()));
  std::array<double, kCountedTags.size()> counts{};
  for (const TaggedToken& t : a.tagged) {
    if (IsPunctuation(t.token) || t.tag == PosTag::kOther) continue;
    counts[static_cast<size_t>(t.tag)] += 1.0;
  }
  out->insert(out->end(), counts.begin(), counts.end());
}

void FeatureExtractor::AppendCase(const QuestionAnalysis& a,
                                  std::vector<double>* out) const {
  double noninitial_caps = 0, all_caps = 0, mixed = 0, digits = 0;
  size_t run = 0, longest_run = 0;
  for (size_t i = 0; i < a.words.size(); ++i) {
    const std::string& w = a.words[i];
    if (AllCaps(w)) ++all_caps;
    if (MixedCase(w)) ++mixed;
    if (HasDigit(w)) ++digits;
    if (i == 0) continue;
    if (Capitalized(w)) {
      ++noninitial_caps;
      longest_run = std::max(longest_run, ++run);
    } else {
      run = 0;
    }
  }
  const double first_caps = !a.words.empty() && Capitalized(a.words[0]) ? 1.0 : 0.0;
  out->insert(out->end(), {noninitial_caps, all_caps, mixed, first_caps, digits,
                           static_cast<double>(longest_run)});
}

void FeatureExtractor::AppendEntityTypes(const QuestionAnalysis& a,
                                         std::vector<double>* out) const {
  const auto counts = gazetteer_.CountTypes(a.words);
  out->insert(out->end(), counts.begin(), counts.end());
}

void FeatureExtractor::AppendMeanEmbedding(const std::vector<std::string>& words,
                                           std::vector<double>* out) const {
  const size_t dim = table_->dimension();
  std::vector<double> sum(dim, 0.0);
  for (const std::string& w : words) {
    auto v = table_->Find(w);
    for (size_t d = 0; d < v.size(); ++d) sum[d] += v[d];
  }
  if (!words.empty()) {
    for (double& s : sum) s /= static_cast<double>(words.size());
  }
  out->insert(out->end(), sum.begin(), sum.end());
}

void FeatureExtractor::AppendConcatEmbedding(const std::vector<std::string>& words,
                                             size_t max_tokens,
                                             std::vector<double>* out) const {
  const size_t dim = table_->dimension();
  for (size_t t = 0; t < max_tokens; ++t) {
    std::span<const double> v;
    if (t < words.size()) v = table_->Find(words[t]);
    for (size_t d = 0; d < dim; ++d) out->push_back(v.empty() ? 0.0 : v[d]);
  }
}

size_t FeatureExtractor::EmbeddingDimension(const FeatureConfig& config) const {
  if (!NeedsEmbeddings(config.variant)) return 0;
  if (table_ == nullptr) {
    throw ConfigError(std::string(FeatureSetName(config.variant)) +
                      " needs an embedding table but none is loaded");
  }
  return table_->dimension();
}

std::vector<std::string> FeatureExtractor::FeatureNames(
    const FeatureConfig& config) const {
  const size_t dim = EmbeddingDimension(config);
  std::vector<std::string> names;
  auto basic = [&] {
    for (size_t i = 0; i < kQuestionTypeCount; ++i) {
      names.push_back("qtype_" +
                      std::string(QuestionTypeName(static_cast<QuestionType>(i))));
    }
    for (size_t i = 0; i < kAnswerTypeCount; ++i) {
      names.push_back("atype_" +
                      std::string(AnswerTypeName(static_cast<AnswerType>(i))));
    }
    names.push_back("n_words");
    for (PosTag tag : kCountedTags) names.push_back("pos_" + std::string(PosTagName(tag)));
  };
  auto vector_names = [&](std::string_view prefix) {
    for (size_t d = 0; d < dim; ++d) {
      names.push_back(std::string(prefix) + "_d" + std::to_string(d));
    }
  };
  switch (config.variant) {
    case FeatureSet::kCF1:
      basic();
      break;
    case FeatureSet::kCF2:
      basic();
      for (auto n : kCaseNames) names.emplace_back(n);
      if (IncludesEntityTypes(config.variant, config.for_task)) {
        for (auto t : kEntityTypes) names.push_back("ent_" + std::string(t));
      }
      break;
    case FeatureSet::kCF3:
      vector_names("emb_mean");
      break;
    case FeatureSet::kCF4:
      for (size_t t = 0; t < config.max_tokens; ++t) {
        vector_names("emb_t" + std::to_string(t));
      }
      break;
    case FeatureSet::kCF5:
      vector_names("emb_nostop");
      break;
    case FeatureSet::kCF6:
      basic();
      vector_names("emb_mean");
      break;
  }
  return names;
}

FeatureVector FeatureExtractor::Extract(const Question& question,
                                        const FeatureConfig& config) const {
  if (config.max_tokens == 0) throw ConfigError("max_tokens must be positive");
  EmbeddingDimension(config);  // validates the table requirement
  const QuestionAnalysis a = Analyze(question);
  FeatureVector fv;
  fv.config = config.Identity();
  fv.names = FeatureNames(config);
  fv.values.reserve(fv.names.size());
  switch (config.variant) {
    case FeatureSet::kCF1:
      AppendBasic(a, &fv.values);
      break;
    case FeatureSet::kCF2:
      AppendBasic(a, &fv.values);
      AppendCase(a, &fv.values);
      if (IncludesEntityTypes(config.variant, config.for_task)) {
        AppendEntityTypes(a, &fv.values);
      }
      break;
    case FeatureSet::kCF3:
      AppendMeanEmbedding(a.words, &fv.values);
      break;
    case FeatureSet::kCF4:
      AppendConcatEmbedding(a.words, config.max_tokens, &fv.values);
      break;
    case FeatureSet::kCF5: {
      std::vector<std::string> kept;
      for (const auto& w : a.words) {
        if (!stop_words_.Contains(w)) kept.push_back(w);
      }
      AppendMeanEmbedding(kept, &fv.values);
      break;
    }
    case FeatureSet::kCF6:
      AppendBasic(a, &fv.values);
      AppendMeanEmbedding(a.words, &fv.values);
      break;
  }
  return fv;
}

}  // namespace pipeforge::features
