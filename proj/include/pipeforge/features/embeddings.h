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

#ifndef PIPEFORGE_FEATURES_EMBEDDINGS_H_
#define PIPEFORGE_FEATURES_EMBEDDINGS_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pipeforge::features {

// Pre-trained word vectors. Immutable after loading; lookups lower-case
// the query.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(size_t dimension) : dimension_(dimension) {}

  // Keeps the first vector for a token. Throws DimensionError on a length
  // mismatch.
  void Add(std::string_view token, std::vector<double> vector);

  // Empty span when the token is unknown.
  std::span<const double> Find(std::string_view token) const;

  size_t dimension() const { return dimension_; }
  size_t size() const { return vectors_.size(); }

 private:
  size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

// Text format `token v1 ... vd`, one token per line. A first line holding
// exactly two integers is read as the `count dim` header. Throws
// DimensionError when a row's length differs from the first data row (or
// the header), ParseError on non-numeric values.
EmbeddingTable ParseEmbeddings(std::istream& in);
EmbeddingTable LoadEmbeddings(const std::filesystem::path& path);

}  // namespace pipeforge::features

#endif  // PIPEFORGE_FEATURES_EMBEDDINGS_H_
