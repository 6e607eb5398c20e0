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

#include "pipeforge/features/lexicons.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pipeforge/core/errors.h"
#include "pipeforge/features/tokenizer.h"

namespace pipeforge::features {

namespace bundled {
extern const std::string_view kStopWords;
extern const std::string_view kGazetteer;
}  // namespace bundled

namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string_view TrimLine(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
    line.remove_suffix(1);
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  return line;
}

template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  size_t line_no = 0;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    std::string_view line = TrimLine(text.substr(0, nl));
    ++line_no;
    if (!line.empty() && line.front() != '#') fn(line, line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

}  // namespace

StopWords StopWords::Parse(std::string_view text) {
  StopWords sw;
  ForEachLine(text, [&](std::string_view line, size_t) {
    sw.words_.insert(ToLower(line));
  });
  return sw;
}

std::string_view BundledStopWordsText() { return bundled::kStopWords; }
std::string_view BundledGazetteerText() { return bundled::kGazetteer; }

StopWords StopWords::Bundled() { return Parse(bundled::kStopWords); }

StopWords StopWords::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

bool StopWords::Contains(std::string_view token) const {
  return words_.find(ToLower(token)) != words_.end();
}

Gazetteer Gazetteer::Parse(std::string_view text) {
  Gazetteer g;
  ForEachLine(text, [&](std::string_view line, size_t line_no) {
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("gazetteer line " + std::to_string(line_no) +
                       ": expected surface<TAB>type");
    }
    const std::string_view type = line.substr(tab + 1);
    auto it = std::find(kEntityTypes.begin(), kEntityTypes.end(), type);
    if (it == kEntityTypes.end()) {
      throw ParseError("gazetteer line " + std::to_string(line_no) +
                       ": unknown entity type '" + std::string(type) + "'");
    }
    // Normalize the surface through the tokenizer so multi-token entries
    // match token sequences.
    const auto tokens = Tokenize(line.substr(0, tab));
    std::string key;
    for (const auto& t : tokens) {
      if (!key.empty()) key += ' ';
      key += ToLower(t);
    }
    g.max_span_ = std::max(g.max_span_, tokens.size());
    g.entries_.emplace(std::move(key),
                       static_cast<size_t>(it - kEntityTypes.begin()));
  });
  return g;
}

Gazetteer Gazetteer::Bundled() { return Parse(bundled::kGazetteer); }

Gazetteer Gazetteer::Load(const std::filesystem::path& path) {
  return Parse(ReadFile(path));
}

std::array<double, kEntityTypes.size()> Gazetteer::CountTypes(
    const std::vector<std::string>& tokens) const {
  std::array<double, kEntityTypes.size()> counts{};
  size_t i = 0;
  while (i < tokens.size()) {
    size_t matched = 0;
    for (size_t span = std::min(max_span_, tokens.size() - i); span >= 1; --span) {
      std::string key;
      for (size_t k = i; k < i + span; ++k) {
        if (k > i) key += ' ';
        key += ToLower(tokens[k]);
      }
      if (auto it = entries_.find(key); it != entries_.end()) {
        counts[it->second] += 1.0;
        matched = span;
        break;
      }
    }
    i += matched > 0 ? matched : 1;
  }
  return counts;
}

}  // namespace pipeforge::features
