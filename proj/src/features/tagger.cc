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

#include "pipeforge/features/tagger.h"

#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "pipeforge/core/errors.h"
#include "pipeforge/features/tokenizer.h"

namespace pipeforge::features {
namespace {

using Lexicon = std::unordered_map<std::string, std::string>;

void AddAll(Lexicon& lex, const char* tag, std::initializer_list<const char*> words) {
  for (const char* w : words) lex.emplace(w, tag);
}

// Function words. These win over the capitalization rule.
const Lexicon& ClosedClass() {
  static const Lexicon lex = [] {
    Lexicon l;
    AddAll(l, "WP", {"what", "who", "whom"});
    AddAll(l, "WP$", {"whose"});
    AddAll(l, "WDT", {"which"});
    AddAll(l, "WRB", {"when", "where", "why", "how"});
    AddAll(l, "DT", {"the", "a", "an", "this", "that", "these", "those", "all",
                     "some", "every", "each", "any", "no", "both", "another"});
    AddAll(l, "IN", {"of", "in", "on", "at", "by", "for", "with", "from",
                     "about", "through", "into", "over", "under", "between",
                     "after", "before", "during", "since", "than", "as",
                     "near", "within", "without", "against", "among", "via",
                     "per", "across", "behind", "along", "upon", "around",
                     "like", "outside", "inside", "throughout", "until"});
    AddAll(l, "TO", {"to"});
    AddAll(l, "CC", {"and", "or", "but", "nor"});
    AddAll(l, "PRP", {"i", "me", "you", "he", "she", "it", "we", "they",
                      "him", "her", "us", "them"});
    AddAll(l, "PRP$", {"my", "your", "his", "its", "our", "their"});
    AddAll(l, "MD", {"can", "could", "will", "would", "shall", "should",
                     "may", "might", "must"});
    AddAll(l, "EX", {"there"});
    AddAll(l, "RB", {"not", "also", "very", "still", "ever", "never"});
    AddAll(l, "VBZ", {"is", "has", "does"});
    AddAll(l, "VBP", {"are", "am", "have", "do"});
    AddAll(l, "VBD", {"was", "were", "did", "had"});
    AddAll(l, "VBN", {"been"});
    AddAll(l, "VBG", {"being"});
    AddAll(l, "VB", {"be"});
    return l;
  }();
  return lex;
}

// Frequent content words whose suffix would mislead the rules below.
const Lexicon& OpenClass() {
  static const Lexicon lex = [] {
    Lexicon l;
    AddAll(l, "VB", {"give", "list", "show", "name", "tell", "find", "write"});
    AddAll(l, "VBZ", {"flows", "lives", "runs", "plays", "owns", "contains",
                      "belongs", "includes", "borders", "means", "speaks"});
    AddAll(l, "VBD", {"wrote", "won", "became", "took", "gave", "made",
                      "began", "led", "ran", "sang", "flew", "grew"});
    AddAll(l, "VBN", {"born", "written", "known", "built", "called", "given",
                      "taken", "grown", "flown"});
    AddAll(l, "JJ", {"famous", "tall", "old", "big", "large", "small",
                     "high", "long", "official", "first", "last", "new",
                     "current", "total", "main", "national", "former"});
    return l;
  }();
  return lex;
}

const std::unordered_set<std::string>& Auxiliaries() {
  static const std::unordered_set<std::string> aux = {
      "is", "are", "was", "were", "be", "been", "being", "am",
      "has", "have", "had"};
  return aux;
}

bool EndsWith(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool IsNumber(const std::string& token) {
  if (token.empty() || !std::isdigit(static_cast<unsigned char>(token[0])))
    return false;
  for (unsigned char c : token) {
    if (!std::isdigit(c) && c != '.' && c != ',' && c != '-') return false;
  }
  return true;
}

std::string RuleTag(const std::vector<std::string>& tokens, size_t i) {
  const std::string& token = tokens[i];
  if (IsPunctuation(token)) return ".";
  if (IsNumber(token)) return "CD";
  const std::string lower = ToLower(token);
  if (auto it = ClosedClass().find(lower); it != ClosedClass().end()) {
    return it->second;
  }
  if (i > 0 && std::isupper(static_cast<unsigned char>(token[0]))) return "NNP";
  if (auto it = OpenClass().find(lower); it != OpenClass().end()) {
    return it->second;
  }
  const size_t n = lower.size();
  if (n > 4 && EndsWith(lower, "ing")) return "VBG";
  if (n > 3 && EndsWith(lower, "ed")) {
    if (i > 0 && Auxiliaries().count(ToLower(tokens[i - 1]))) return "VBN";
    return "VBD";
  }
  if (n > 4 && EndsWith(lower, "ly")) return "RB";
  if (n > 5 && EndsWith(lower, "est")) return "JJS";
  for (std::string_view suffix : {"ous", "ful", "ive", "able", "ible", "ical", "less"}) {
    if (n > suffix.size() + 2 && EndsWith(lower, suffix)) return "JJ";
  }
  if (n > 3 && EndsWith(lower, "s") && !EndsWith(lower, "ss") &&
      !EndsWith(lower, "us") && !EndsWith(lower, "is")) {
    return "NNS";
  }
  return "NN";
}

}  // namespace

std::string_view PosTagName(PosTag tag) {
  switch (tag) {
    case PosTag::kNN: return "NN";
    case PosTag::kNNS: return "NNS";
    case PosTag::kNNP: return "NNP";
    case PosTag::kNNPS: return "NNPS";
    case PosTag::kVB: return "VB";
    case PosTag::kVBZ: return "VBZ";
    case PosTag::kVBD: return "VBD";
    case PosTag::kVBN: return "VBN";
    case PosTag::kVBG: return "VBG";
    case PosTag::kIN: return "IN";
    case PosTag::kDT: return "DT";
    case PosTag::kWP: return "WP";
    case PosTag::kWRB: return "WRB";
    case PosTag::kJJ: return "JJ";
    case PosTag::kOther: return "OTHER";
  }
  return "OTHER";
}

PosTag CloseTag(std::string_view penn) {
  for (PosTag tag : kCountedTags) {
    if (PosTagName(tag) == penn) return tag;
  }
  return PosTag::kOther;
}

std::vector<TaggedToken> TagTokens(
    const std::vector<std::string>& tokens,
    const std::optional<std::vector<std::string>>& precomputed) {
  if (tokens.empty()) throw RangeError("cannot tag an empty token list");
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  if (precomputed) {
    if (precomputed->size() != tokens.size()) {
      throw DimensionError("precomputed tag count " +
                           std::to_string(precomputed->size()) +
                           " != token count " + std::to_string(tokens.size()));
    }
    for (size_t i = 0; i < tokens.size(); ++i) {
      out.push_back({tokens[i], CloseTag((*precomputed)[i])});
    }
    return out;
  }
  for (size_t i = 0; i < tokens.size(); ++i) {
    out.push_back({tokens[i], CloseTag(RuleTag(tokens, i))});
  }
  return out;
}

std::string_view QuestionTypeName(QuestionType type) {
  switch (type) {
    case QuestionType::kWhat: return "what";
    case QuestionType::kWhich: return "which";
    case QuestionType::kWho: return "who";
    case QuestionType::kWhen: return "when";
    case QuestionType::kWhere: return "where";
    case QuestionType::kHow: return "how";
    case QuestionType::kGiveList: return "give_list";
    case QuestionType::kBooleanAux: return "boolean_aux";
  }
  return "give_list";
}

std::string_view AnswerTypeName(AnswerType type) {
  switch (type) {
    case AnswerType::kBoolean: return "boolean";
    case AnswerType::kNumber: return "number";
    case AnswerType::kDate: return "date";
    case AnswerType::kString: return "string";
    case AnswerType::kResource: return "resource";
  }
  return "resource";
}

QuestionType ClassifyQuestion(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw RangeError("cannot classify an empty question");
  const std::string first = ToLower(tokens.front());
  if (first == "what") return QuestionType::kWhat;
  if (first == "which") return QuestionType::kWhich;
  if (first == "who") return QuestionType::kWho;
  if (first == "when") return QuestionType::kWhen;
  if (first == "where") return QuestionType::kWhere;
  if (first == "how") return QuestionType::kHow;
  if (first == "give" || first == "list" || first == "show") {
    return QuestionType::kGiveList;
  }
  static const std::unordered_set<std::string> kAux = {
      "is", "are", "was", "were", "do", "does", "did", "can"};
  if (kAux.count(first)) return QuestionType::kBooleanAux;
  return QuestionType::kGiveList;
}

AnswerType ClassifyAnswer(const std::vector<std::string>& tokens) {
  const QuestionType type = ClassifyQuestion(tokens);
  if (type == QuestionType::kBooleanAux) return AnswerType::kBoolean;
  const std::string first = ToLower(tokens.front());
  const std::string second = tokens.size() > 1 ? ToLower(tokens[1]) : "";
  if ((first == "how" && (second == "many" || second == "much")) ||
      first == "count") {
    return AnswerType::kNumber;
  }
  if (first == "when") return AnswerType::kDate;
  if (first == "what" || first == "how") return AnswerType::kString;
  return AnswerType::kResource;
}

}  // namespace pipeforge::features
