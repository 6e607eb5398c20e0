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

#include "pipeforge/learners/naive_bayes.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pipeforge/core/errors.h"

namespace pipeforge::learners {

double NaiveBayesModel::Probability(std::span<const double> row) const {
  std::array<double, 2> log_joint = log_prior;
  for (int k = 0; k < 2; ++k) {
    for (size_t c = 0; c < row.size(); ++c) {
      const double d = row[c] - mean[k][c];
      log_joint[k] -= 0.5 * (std::log(2.0 * std::numbers::pi * variance[k][c]) +
                             d * d / variance[k][c]);
    }
  }
  const double hi = std::max(log_joint[0], log_joint[1]);
  const double e0 = std::exp(log_joint[0] - hi);
  const double e1 = std::exp(log_joint[1] - hi);
  return e1 / (e0 + e1);
}

nlohmann::json NaiveBayesModel::ToJson() const {
  return {{"log_prior", log_prior}, {"mean", mean}, {"variance", variance}};
}

NaiveBayesModel NaiveBayesModel::FromJson(const nlohmann::json& j) {
  NaiveBayesModel m;
  m.log_prior = j.at("log_prior").get<std::array<double, 2>>();
  m.mean = j.at("mean").get<std::array<std::vector<double>, 2>>();
  m.variance = j.at("variance").get<std::array<std::vector<double>, 2>>();
  return m;
}

NaiveBayesModel FitNaiveBayes(const DenseMatrix& x, std::span<const double> y,
                              double var_smoothing) {
  const size_t p = x.cols();
  std::array<double, 2> count{};
  NaiveBayesModel m;
  for (int k = 0; k < 2; ++k) {
    m.mean[k].assign(p, 0.0);
    m.variance[k].assign(p, 0.0);
  }
  for (size_t r = 0; r < x.rows(); ++r) {
    const int k = y[r] > 0.5 ? 1 : 0;
    ++count[k];
    for (size_t c = 0; c < p; ++c) m.mean[k][c] += x.at(r, c);
  }
  if (count[0] == 0 || count[1] == 0) {
    throw DegenerateError("naive Bayes needs both classes");
  }
  for (int k = 0; k < 2; ++k) {
    for (double& v : m.mean[k]) v /= count[k];
  }
  for (size_t r = 0; r < x.rows(); ++r) {
    const int k = y[r] > 0.5 ? 1 : 0;
    for (size_t c = 0; c < p; ++c) {
      const double d = x.at(r, c) - m.mean[k][c];
      m.variance[k][c] += d * d;
    }
  }
  // Global per-feature variance sets the smoothing scale.
  double max_var = 0.0;
  for (size_t c = 0; c < p; ++c) {
    double sum = 0.0, sum_sq = 0.0;
    for (size_t r = 0; r < x.rows(); ++r) {
      sum += x.at(r, c);
      sum_sq += x.at(r, c) * x.at(r, c);
    }
    const double n = static_cast<double>(x.rows());
    max_var = std::max(max_var, sum_sq / n - (sum / n) * (sum / n));
  }
  const double epsilon = var_smoothing * (max_var > 0.0 ? max_var : 1.0);
  for (int k = 0; k < 2; ++k) {
    for (double& v : m.variance[k]) v = v / count[k] + epsilon;
    m.log_prior[k] = std::log(count[k] / static_cast<double>(x.rows()));
  }
  return m;
}

}  // namespace pipeforge::learners
