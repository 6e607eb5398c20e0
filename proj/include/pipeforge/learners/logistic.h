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

#ifndef PIPEFORGE_LEARNERS_LOGISTIC_H_
#define PIPEFORGE_LEARNERS_LOGISTIC_H_

#include <span>
#include <vector>

#include <json.hpp>

#include "pipeforge/learners/dataset.h"

namespace pipeforge::learners {

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;
  size_t iterations = 0;

  double Probability(std::span<const double> row) const;

  nlohmann::json ToJson() const;
  static LogisticModel FromJson(const nlohmann::json& j);
  bool operator==(const LogisticModel&) const = default;
};

struct LogisticOptions {
  double learning_rate = 0.1;
  double l2 = 1e-3;
  size_t max_iterations = 2000;
  double tolerance = 1e-6;
};

double Sigmoid(double z);

// Mean binary cross-entropy plus (l2/2)*||w||^2; the bias is not
// penalized. Labels are 0/1.
double LogisticLoss(const DenseMatrix& x, std::span<const double> y,
                    std::span<const double> weights, double bias, double l2);

// Analytic gradient of LogisticLoss.
void LogisticGradient(const DenseMatrix& x, std::span<const double> y,
                      std::span<const double> weights, double bias, double l2,
                      std::span<double> grad_weights, double* grad_bias);

// Full-batch gradient descent from zero until the gradient norm drops
// below the tolerance or the iteration budget runs out.
LogisticModel FitLogistic(const DenseMatrix& x, std::span<const double> y,
                          const LogisticOptions& options);

}  // namespace pipeforge::learners

#endif  // PIPEFORGE_LEARNERS_LOGISTIC_H_
