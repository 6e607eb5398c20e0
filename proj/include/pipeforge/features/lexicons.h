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

#ifndef PIPEFORGE_FEATURES_LEXICONS_H_
#define PIPEFORGE_FEATURES_LEXICONS_H_

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pipeforge::features {

// The coarse entity types counted by CF2, in column order.
inline constexpr std::array<std::string_view, 17> kEntityTypes = {
    "PERSON",   "ORGANIZATION", "COMPANY",  "UNIVERSITY", "SPORTS_TEAM",
    "COUNTRY",  "CITY",         "REGION",   "RIVER",      "MOUNTAIN",
    "BUILDING", "FILM",         "BOOK",     "MUSIC",      "SOFTWARE",
    "EVENT",    "LANGUAGE"};

// Lower-cased stop words; one word per line in the text form.
class StopWords {
 public:
  static StopWords Bundled();
  static StopWords Parse(std::string_view text);
  static StopWords Load(const std::filesystem::path& path);

  bool Contains(std::string_view token) const;
  size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

// Surface form -> entity type. Lines are `surface<TAB>type`; matching is
// case-insensitive over whole tokens, longest match first.
class Gazetteer {
 public:
  static Gazetteer Bundled();
  static Gazetteer Parse(std::string_view text);
  static Gazetteer Load(const std::filesystem::path& path);

  // Counts per entry of kEntityTypes for the non-overlapping longest
  // matches in `tokens`. Unmatched tokens contribute nothing.
  std::array<double, kEntityTypes.size()> CountTypes(
      const std::vector<std::string>& tokens) const;

  size_t size() const { return entries_.size(); }
  size_t max_span() const { return max_span_; }

 private:
  std::map<std::string, size_t, std::less<>> entries_;  // surface -> type index
  size_t max_span_ = 1;
};

// Raw text of the resources compiled into the library.
std::string_view BundledStopWordsText();
std::string_view BundledGazetteerText();

}  // namespace pipeforge::features

#endif  // PIPEFORGE_FEATURES_LEXICONS_H_
