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

#ifndef PIPEFORGE_LEARNERS_NAIVE_BAYES_H_
#define PIPEFORGE_LEARNERS_NAIVE_BAYES_H_

#include <array>
#include <span>
#include <vector>

#include <json.hpp>

#include "pipeforge/learners/dataset.h"

namespace pipeforge::learners {

// Two-class Gaussian naive Bayes.
struct NaiveBayesModel {
  std::array<double, 2> log_prior{};
  std::array<std::vector<double>, 2> mean;
  std::array<std::vector<double>, 2> variance;

  // Posterior probability of class 1.
  double Probability(std::span<const double> row) const;

  nlohmann::json ToJson() const;
  static NaiveBayesModel FromJson(const nlohmann::json& j);
  bool operator==(const NaiveBayesModel&) const = default;
};

// Labels must be 0/1 with both classes present. Every variance is floored
// by var_smoothing times the largest per-feature variance (or by
// var_smoothing itself when all features are constant).
NaiveBayesModel FitNaiveBayes(const DenseMatrix& x, std::span<const double> y,
                              double var_smoothing);

}  // namespace pipeforge::learners

#endif  // PIPEFORGE_LEARNERS_NAIVE_BAYES_H_
