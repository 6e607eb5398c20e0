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


#include "pipeforge/learners/gini.h"

#include <algorithm>

#include "pipeforge/core/errors.h"

namespace pipeforge::learners {

std::vector<double> TreeImpurityDecrease(const Tree& tree, size_t n_features) {
  std::vector<double> decrease(n_features, 0.0);
  const auto& nodes = tree.nodes();
  if (nodes.empty() || nodes[0].weight <= 0.0) return decrease;
  const double total = nodes[0].weight;
  for (const TreeNode& node : nodes) {
    if (node.is_leaf()) continue;
    if (static_cast<size_t>(node.feature) >= n_features) {
      throw DimensionError("tree splits on feature " + std::to_string(node.feature) +
                           " but only " + std::to_string(n_features) + " exist");
    }
    const TreeNode& l = nodes[node.left];
    const TreeNode& r = nodes[node.right];
    const double gain =
        node.weight * node.impurity - l.weight * l.impurity - r.weight * r.impurity;
    // Rounding can leave a zero-gain split marginally negative.
    decrease[node.feature] += std::max(gain, 0.0) / total;
  }
  return decrease;
}

std::map<std::string, double> GiniImportance(const Predictor& predictor) {
  const TreeEnsemble* ensemble = predictor.ensemble();
  if (!IsTreeKind(predictor.kind()) || ensemble == nullptr) {
    throw ConfigError("Gini importance needs a tree-ensemble predictor, got " +
                      std::string(ModelKindName(predictor.kind())));
  }
  const auto& names = predictor.feature_names();
  std::vector<double> sum(names.size(), 0.0);
  size_t internal = 0;
  for (const Tree& tree : ensemble->trees) {
    internal += tree.internal_node_count();
    const auto d = TreeImpurityDecrease(tree, names.size());
    for (size_t f = 0; f < d.size(); ++f) sum[f] += d[f];
  }
  if (internal == 0) {
    throw DegenerateError("importance undefined: the ensemble has no internal node");
  }
  double total = 0.0;
  for (double& s : sum) {
    s /= static_cast<double>(ensemble->trees.size());
    total += s;
  }
  if (!(total > 0.0)) {
    throw DegenerateError("importance undefined: no split decreases impurity");
  }
  std::map<std::string, double> out;
  for (size_t f = 0; f < names.size(); ++f) out[names[f]] = sum[f] / total;
  return out;
}

}  // namespace pipeforge::learners
