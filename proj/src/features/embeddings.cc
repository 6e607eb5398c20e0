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

#include "pipeforge/features/embeddings.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pipeforge/core/errors.h"
#include "pipeforge/features/tokenizer.h"

namespace pipeforge::features {
namespace {

std::vector<std::string> SplitFields(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> fields;
  for (std::string f; in >> f;) fields.push_back(std::move(f));
  return fields;
}

bool ParseInt(const std::string& s, size_t* out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

void EmbeddingTable::Add(std::string_view token, std::vector<double> vector) {
  if (vector.size() != dimension_) {
    throw DimensionError("embedding for '" + std::string(token) + "' has " +
                         std::to_string(vector.size()) + " values, expected " +
                         std::to_string(dimension_));
  }
  vectors_.emplace(ToLower(token), std::move(vector));
}

std::span<const double> EmbeddingTable::Find(std::string_view token) const {
  auto it = vectors_.find(ToLower(token));
  if (it == vectors_.end()) return {};
  return it->second;
}

EmbeddingTable ParseEmbeddings(std::istream& in) {
  EmbeddingTable table;
  bool have_dimension = false;
  size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto fields = SplitFields(line);
    if (fields.empty()) continue;
    size_t count = 0, dim = 0;
    if (line_no == 1 && fields.size() == 2 && ParseInt(fields[0], &count) &&
        ParseInt(fields[1], &dim)) {
      if (dim == 0) throw ParseError("embedding header declares dimension 0");
      table = EmbeddingTable(dim);
      have_dimension = true;
      continue;
    }
    if (fields.size() < 2) {
      throw ParseError("embedding line " + std::to_string(line_no) +
                       ": token without values");
    }
    std::vector<double> values;
    values.reserve(fields.size() - 1);
    for (size_t i = 1; i < fields.size(); ++i) {
      const std::string& f = fields[i];
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(v)) {
        throw ParseError("embedding line " + std::to_string(line_no) +
                         ": non-numeric value '" + f + "'");
      }
      values.push_back(v);
    }
    if (!have_dimension) {
      table = EmbeddingTable(values.size());
      have_dimension = true;
    }
    if (values.size() != table.dimension()) {
      throw DimensionError("embedding line " + std::to_string(line_no) + ": " +
                           std::to_string(values.size()) + " values, expected " +
                           std::to_string(table.dimension()));
    }
    if (table.Find(fields[0]).empty()) table.Add(fields[0], std::move(values));
  }
  if (!have_dimension) throw ParseError("embedding file has no vectors");
  return table;
}

EmbeddingTable LoadEmbeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  return ParseEmbeddings(in);
}

}  // namespace pipeforge::features
