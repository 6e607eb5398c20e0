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

#include "pipeforge/learners/logistic.h"

#include <cmath>

#include "pipeforge/core/errors.h"

namespace pipeforge::learners {

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

double Margin(std::span<const double> row, std::span<const double> w, double b) {
  double z = b;
  for (size_t c = 0; c < w.size(); ++c) z += w[c] * row[c];
  return z;
}

// log(1 + exp(z)) without overflow.
double Softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

}  // namespace

double LogisticModel::Probability(std::span<const double> row) const {
  return Sigmoid(Margin(row, weights, bias));
}

nlohmann::json LogisticModel::ToJson() const {
  return {{"weights", weights}, {"bias", bias}, {"iterations", iterations}};
}

LogisticModel LogisticModel::FromJson(const nlohmann::json& j) {
  LogisticModel m;
  m.weights = j.at("weights").get<std::vector<double>>();
  m.bias = j.at("bias").get<double>();
  m.iterations = j.value("iterations", size_t{0});
  return m;
}

double LogisticLoss(const DenseMatrix& x, std::span<const double> y,
                    std::span<const double> weights, double bias, double l2) {
  double loss = 0.0;
  for (size_t r = 0; r < x.rows(); ++r) {
    const double z = Margin(x.row(r), weights, bias);
    // -[y log s(z) + (1-y) log(1-s(z))] = softplus(z) - y z
    loss += Softplus(z) - y[r] * z;
  }
  loss /= static_cast<double>(x.rows());
  double norm = 0.0;
  for (double w : weights) norm += w * w;
  return loss + 0.5 * l2 * norm;
}

void LogisticGradient(const DenseMatrix& x, std::span<const double> y,
                      std::span<const double> weights, double bias, double l2,
                      std::span<double> grad_weights, double* grad_bias) {
  const double n = static_cast<double>(x.rows());
  std::fill(grad_weights.begin(), grad_weights.end(), 0.0);
  double gb = 0.0;
  for (size_t r = 0; r < x.rows(); ++r) {
    const auto row = x.row(r);
    const double residual = Sigmoid(Margin(row, weights, bias)) - y[r];
    for (size_t c = 0; c < weights.size(); ++c) grad_weights[c] += residual * row[c];
    gb += residual;
  }
  for (size_t c = 0; c < weights.size(); ++c) {
    grad_weights[c] = grad_weights[c] / n + l2 * weights[c];
  }
  *grad_bias = gb / n;
}

LogisticModel FitLogistic(const DenseMatrix& x, std::span<const double> y,
                          const LogisticOptions& options) {
  if (x.rows() == 0) throw RangeError("logistic regression needs at least one row");
  LogisticModel model;
  model.weights.assign(x.cols(), 0.0);
  std::vector<double> grad(x.cols());
  double grad_bias = 0.0;
  for (size_t it = 0; it < options.max_iterations; ++it) {
    LogisticGradient(x, y, model.weights, model.bias, options.l2, grad, &grad_bias);
    double norm_sq = grad_bias * grad_bias;
    for (double g : grad) norm_sq += g * g;
    model.iterations = it;
    if (std::sqrt(norm_sq) < options.tolerance) break;
    for (size_t c = 0; c < grad.size(); ++c) {
      model.weights[c] -= options.learning_rate * grad[c];
    }
    model.bias -= options.learning_rate * grad_bias;
    model.iterations = it + 1;
  }
  return model;
}

}  // namespace pipeforge::learners
