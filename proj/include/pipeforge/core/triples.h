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

#ifndef PIPEFORGE_CORE_TRIPLES_H_
#define PIPEFORGE_CORE_TRIPLES_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pipeforge {

// Expands the well-known DBpedia/W3C prefixes (dbr:, dbo:, dbp:, rdf:,
// rdfs:, owl:, xsd:, foaf:) and strips angle brackets. Other strings are
// returned trimmed but otherwise unchanged.
std::string ExpandIri(std::string_view iri);

// True when the string has a scheme separator preceded by a scheme name
// (letter followed by letters, digits, '+', '-', '.').
bool IsAbsoluteIri(std::string_view iri);

// Trim only; comparisons are case-preserving.
std::string NormalizeIri(std::string_view iri);

// Canonical form of a list of triple patterns: each "s p o" (optional
// trailing '.') becomes "<s> <p> ?vN" with IRIs expanded and bracketed,
// variables renamed ?v0, ?v1, ... in order of first appearance across the
// whole list, literals kept verbatim. Throws ParseError on patterns that do
// not have exactly three terms.
std::vector<std::string> CanonicalizeTriples(
    const std::vector<std::string>& patterns);

std::set<std::string> CanonicalTripleSet(
    const std::vector<std::string>& patterns);

}  // namespace pipeforge

#endif  // PIPEFORGE_CORE_TRIPLES_H_
