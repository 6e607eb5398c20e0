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

#include "pipeforge/core/triples.h"

#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "pipeforge/core/errors.h"

namespace pipeforge {
namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 8>
    kPrefixes = {{
        {"dbr:", "http://dbpedia.org/resource/"},
        {"dbo:", "http://dbpedia.org/ontology/"},
        {"dbp:", "http://dbpedia.org/property/"},
        {"rdf:", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
        {"rdfs:", "http://www.w3.org/2000/01/rdf-schema#"},
        {"owl:", "http://www.w3.org/2002/07/owl#"},
        {"xsd:", "http://www.w3.org/2001/XMLSchema#"},
        {"foaf:", "http://xmlns.com/foaf/0.1/"},
    }};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool IsVariable(std::string_view term) {
  return term.size() > 1 && (term[0] == '?' || term[0] == '$');
}

}  // namespace

std::string NormalizeIri(std::string_view iri) { return std::string(Trim(iri)); }

std::string ExpandIri(std::string_view iri) {
  iri = Trim(iri);
  if (iri.size() >= 2 && iri.front() == '<' && iri.back() == '>') {
    return std::string(iri.substr(1, iri.size() - 2));
  }
  for (const auto& [prefix, base] : kPrefixes) {
    if (iri.starts_with(prefix)) {
      return std::string(base) + std::string(iri.substr(prefix.size()));
    }
  }
  return std::string(iri);
}

bool IsAbsoluteIri(std::string_view iri) {
  iri = Trim(iri);
  const size_t colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (size_t i = 1; i < colon; ++i) {
    const unsigned char c = iri[i];
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return colon + 1 < iri.size();
}

std::vector<std::string> CanonicalizeTriples(
    const std::vector<std::string>& patterns) {
  std::map<std::string, std::string> renamed;
  std::vector<std::string> out;
  out.reserve(patterns.size());
  for (const std::string& pattern : patterns) {
    std::istringstream in(pattern);
    std::vector<std::string> terms;
    for (std::string term; in >> term;) terms.push_back(term);
    if (!terms.empty() && terms.back() == ".") terms.pop_back();
    if (!terms.empty() && terms.back().size() > 1 && terms.back().back() == '.' &&
        terms.back().front() != '"') {
      terms.back().pop_back();
    }
    if (terms.size() != 3) {
      throw ParseError("triple pattern needs 3 terms: '" + pattern + "'");
    }
    std::string canonical;
    for (size_t i = 0; i < 3; ++i) {
      const std::string& term = terms[i];
      std::string rendered;
      if (IsVariable(term)) {
        auto it = renamed.find(term.substr(1));
        if (it == renamed.end()) {
          it = renamed
                   .emplace(term.substr(1),
                            "?v" + std::to_string(renamed.size()))
                   .first;
        }
        rendered = it->second;
      } else if (term.front() == '"' ||
                 std::isdigit(static_cast<unsigned char>(term.front()))) {
        rendered = term;
      } else {
        rendered = "<" + ExpandIri(term) + ">";
      }
      if (i > 0) canonical += ' ';
      canonical += rendered;
    }
    out.push_back(std::move(canonical));
  }
  return out;
}

std::set<std::string> CanonicalTripleSet(
    const std::vector<std::string>& patterns) {
  auto list = CanonicalizeTriples(patterns);
  return {list.begin(), list.end()};
}

}  // namespace pipeforge
