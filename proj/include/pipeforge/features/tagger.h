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

#ifndef PIPEFORGE_FEATURES_TAGGER_H_
#define PIPEFORGE_FEATURES_TAGGER_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pipeforge::features {

// Reduced Penn Treebank tagset. Every other Penn tag collapses to kOther.
enum class PosTag {
  kNN, kNNS, kNNP, kNNPS, kVB, kVBZ, kVBD, kVBN, kVBG, kIN, kDT, kWP, kWRB,
  kJJ, kOther,
};

// The 14 counted tags, i.e. everything except kOther, in enum order.
inline constexpr std::array<PosTag, 14> kCountedTags = {
    PosTag::kNN,  PosTag::kNNS, PosTag::kNNP, PosTag::kNNPS, PosTag::kVB,
    PosTag::kVBZ, PosTag::kVBD, PosTag::kVBN, PosTag::kVBG,  PosTag::kIN,
    PosTag::kDT,  PosTag::kWP,  PosTag::kWRB, PosTag::kJJ};

std::string_view PosTagName(PosTag tag);

// Maps a Penn tag string onto the reduced set ("WDT" -> kOther).
PosTag CloseTag(std::string_view penn);

struct TaggedToken {
  std::string token;
  PosTag tag = PosTag::kOther;
};

// Tags `tokens`. With `precomputed` the given tags are used (closed over
// the reduced set) and their count must equal the token count, otherwise
// DimensionError. Without it a lexicon and suffix rule tagger runs:
// closed-class lexicon, then non-initial capitalized -> NNP, then a small
// open-class lexicon, then suffix rules (-ing VBG, -ed VBD/VBN, -s NNS),
// defaulting to NN.
std::vector<TaggedToken> TagTokens(
    const std::vector<std::string>& tokens,
    const std::optional<std::vector<std::string>>& precomputed = std::nullopt);

enum class QuestionType {
  kWhat, kWhich, kWho, kWhen, kWhere, kHow, kGiveList, kBooleanAux,
};
inline constexpr size_t kQuestionTypeCount = 8;

enum class AnswerType { kBoolean, kNumber, kDate, kString, kResource };
inline constexpr size_t kAnswerTypeCount = 5;

std::string_view QuestionTypeName(QuestionType type);
std::string_view AnswerTypeName(AnswerType type);

// First matching rule: leading wh-word, leading give/list/show, leading
// auxiliary, otherwise give_list.
QuestionType ClassifyQuestion(const std::vector<std::string>& tokens);

AnswerType ClassifyAnswer(const std::vector<std::string>& tokens);

}  // namespace pipeforge::features

#endif  // PIPEFORGE_FEATURES_TAGGER_H_
