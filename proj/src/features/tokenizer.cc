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

#include "pipeforge/features/tokenizer.h"

#include <algorithm>
#include <cctype>

#include "pipeforge/core/errors.h"

namespace pipeforge::features {
namespace {

bool IsDetachable(char c) {
  switch (c) {
    case '?':
    case '.':
    case '!':
    case ',':
    case '\'':
    case '"':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string ToLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool IsPunctuation(std::string_view token) {
  return !token.empty() &&
         std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::ispunct(c); });
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    if (end == pos) break;
    std::string_view chunk = text.substr(pos, end - pos);
    pos = end;

    while (!chunk.empty() && IsDetachable(chunk.front())) {
      tokens.emplace_back(1, chunk.front());
      chunk.remove_prefix(1);
    }
    std::vector<std::string> trailing;
    while (!chunk.empty() && IsDetachable(chunk.back())) {
      trailing.emplace_back(1, chunk.back());
      chunk.remove_suffix(1);
    }
    if (!chunk.empty()) tokens.emplace_back(chunk);
    tokens.insert(tokens.end(), trailing.rbegin(), trailing.rend());
  }
  if (tokens.empty()) throw RangeError("cannot tokenize blank text");
  return tokens;
}

}  // namespace pipeforge::features
