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

#include "pipeforge/learners/dataset.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "pipeforge/core/errors.h"

namespace pipeforge::learners {

DenseMatrix DenseMatrix::FromRows(const std::vector<std::vector<double>>& rows) {
  DenseMatrix m;
  if (rows.empty()) return m;
  m.cols_ = rows.front().size();
  for (const auto& r : rows) m.AppendRow(r);
  return m;
}

void DenseMatrix::AppendRow(std::span<const double> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) {
    throw DimensionError("row has " + std::to_string(values.size()) +
                         " values, matrix has " + std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

DenseMatrix DenseMatrix::SelectColumns(const std::vector<size_t>& columns) const {
  DenseMatrix out(rows_, columns.size());
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < columns.size(); ++c) out.at(r, c) = at(r, columns[c]);
  }
  return out;
}

DenseMatrix DenseMatrix::SelectRows(const std::vector<size_t>& rows) const {
  DenseMatrix out(rows.size(), cols_);
  for (size_t r = 0; r < rows.size(); ++r) {
    std::copy_n(row(rows[r]).begin(), cols_, out.row(r).begin());
  }
  return out;
}

void TrainingSet::Validate() const {
  if (x.rows() != y.size()) {
    throw ValidationError("training set has " + std::to_string(x.rows()) +
                          " rows but " + std::to_string(y.size()) + " labels");
  }
  if (x.rows() > 0 && x.cols() != feature_names.size()) {
    throw ValidationError("training set has " + std::to_string(x.cols()) +
                          " columns but " + std::to_string(feature_names.size()) +
                          " feature names");
  }
  for (double label : y) {
    if (!(label >= 0.0 && label <= 1.0)) {
      throw ValidationError("training label outside [0,1]");
    }
  }
  for (size_t r = 0; r < x.rows(); ++r) {
    for (double v : x.row(r)) {
      if (!std::isfinite(v)) throw ValidationError("non-finite feature value");
    }
  }
}

TrainingSet TrainingSet::SelectFeatures(const std::vector<std::string>& names) const {
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < feature_names.size(); ++i) index.emplace(feature_names[i], i);
  std::vector<size_t> columns;
  columns.reserve(names.size());
  for (const auto& name : names) {
    auto it = index.find(name);
    if (it == index.end()) throw DimensionError("unknown feature '" + name + "'");
    columns.push_back(it->second);
  }
  TrainingSet out;
  out.x = x.SelectColumns(columns);
  out.y = y;
  out.feature_names = names;
  return out;
}

void MinMaxScaler::Fit(const DenseMatrix& x) {
  min_.assign(x.cols(), 0.0);
  max_.assign(x.cols(), 0.0);
  for (size_t c = 0; c < x.cols(); ++c) {
    double lo = x.rows() ? x.at(0, c) : 0.0;
    double hi = lo;
    for (size_t r = 1; r < x.rows(); ++r) {
      lo = std::min(lo, x.at(r, c));
      hi = std::max(hi, x.at(r, c));
    }
    min_[c] = lo;
    max_[c] = hi;
  }
}

void MinMaxScaler::TransformInPlace(std::span<double> row) const {
  if (row.size() != min_.size()) {
    throw DimensionError("scaler fitted on " + std::to_string(min_.size()) +
                         " columns, got " + std::to_string(row.size()));
  }
  for (size_t c = 0; c < row.size(); ++c) {
    const double range = max_[c] - min_[c];
    row[c] = range > 0.0 ? (row[c] - min_[c]) / range : 0.0;
  }
}

DenseMatrix MinMaxScaler::Transform(const DenseMatrix& x) const {
  DenseMatrix out = x;
  for (size_t r = 0; r < out.rows(); ++r) TransformInPlace(out.row(r));
  return out;
}

nlohmann::json MinMaxScaler::ToJson() const {
  return {{"min", min_}, {"max", max_}};
}

MinMaxScaler MinMaxScaler::FromJson(const nlohmann::json& j) {
  MinMaxScaler s;
  s.min_ = j.at("min").get<std::vector<double>>();
  s.max_ = j.at("max").get<std::vector<double>>();
  if (s.min_.size() != s.max_.size()) throw ParseError("scaler min/max length mismatch");
  return s;
}

}  // namespace pipeforge::learners
