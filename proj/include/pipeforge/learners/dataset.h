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

#ifndef PIPEFORGE_LEARNERS_DATASET_H_
#define PIPEFORGE_LEARNERS_DATASET_H_

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace pipeforge::learners {

// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(size_t rows, size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix FromRows(const std::vector<std::vector<double>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  double& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  double at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void AppendRow(std::span<const double> values);

  DenseMatrix SelectColumns(const std::vector<size_t>& columns) const;
  DenseMatrix SelectRows(const std::vector<size_t>& rows) const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

// Features of the questions one component was evaluated on, and that
// component's per-question F-scores.
struct TrainingSet {
  DenseMatrix x;
  std::vector<double> y;
  std::vector<std::string> feature_names;

  size_t size() const { return y.size(); }

  // Throws ValidationError on shape mismatches, labels outside [0,1] or
  // non-finite features.
  void Validate() const;

  // Restricts to the named columns, in the given order.
  TrainingSet SelectFeatures(const std::vector<std::string>& names) const;
};

// Maps each column onto [0,1] using the training range. Constant columns
// map to 0. Values outside the fitted range are not clipped.
class MinMaxScaler {
 public:
  void Fit(const DenseMatrix& x);
  void TransformInPlace(std::span<double> row) const;
  DenseMatrix Transform(const DenseMatrix& x) const;

  size_t size() const { return min_.size(); }
  nlohmann::json ToJson() const;
  static MinMaxScaler FromJson(const nlohmann::json& j);

  bool operator==(const MinMaxScaler&) const = default;

 private:
  std::vector<double> min_;
  std::vector<double> max_;
};

}  // namespace pipeforge::learners

#endif  // PIPEFORGE_LEARNERS_DATASET_H_
