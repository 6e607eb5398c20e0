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

#ifndef PIPEFORGE_LEARNERS_TREE_H_
#define PIPEFORGE_LEARNERS_TREE_H_

#include <span>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/rng.h"
#include "pipeforge/learners/dataset.h"

namespace pipeforge::learners {

struct TreeNode {
  int feature = -1;  // -1 for leaves
  double threshold = 0.0;  // go left when x[feature] <= threshold
  int left = -1;
  int right = -1;
  double value = 0.0;  // mean label of the node's samples
  double weight = 0.0;  // number of training samples (with multiplicity)
  double impurity = 0.0;

  bool is_leaf() const { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

enum class Impurity {
  kVariance,  // regression on raw labels
  kGini,      // binary labels; 2p(1-p)
};

struct TreeParams {
  int max_depth = 12;
  size_t min_samples_leaf = 2;
  // Number of non-constant features examined per split; 0 means all.
  size_t max_features = 0;
  // Draw one uniform threshold per candidate feature instead of searching
  // every cut point (extremely randomized trees).
  bool random_splits = false;
  Impurity impurity = Impurity::kVariance;
};

// Binary CART tree stored as a flat node array; node 0 is the root.
class Tree {
 public:
  double Predict(std::span<const double> row) const;

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  size_t internal_node_count() const;
  int depth() const;

  nlohmann::json ToJson() const;
  static Tree FromJson(const nlohmann::json& j);

  bool operator==(const Tree&) const = default;

 private:
  friend Tree FitTree(const DenseMatrix&, std::span<const double>,
                      std::vector<size_t>, const TreeParams&, Rng&);
  std::vector<TreeNode> nodes_;
};

// Grows a tree on the rows listed in `samples` (duplicates act as weights,
// as produced by bootstrapping). Splits are accepted whenever the node is
// impure and some feature admits a cut that respects min_samples_leaf,
// even if the impurity decrease is zero; the best split is the one with
// the largest decrease, first found wins ties.
Tree FitTree(const DenseMatrix& x, std::span<const double> y,
             std::vector<size_t> samples, const TreeParams& params, Rng& rng);

double NodeImpurity(Impurity kind, double sum, double sum_sq, double weight);

}  // namespace pipeforge::learners

#endif  // PIPEFORGE_LEARNERS_TREE_H_
