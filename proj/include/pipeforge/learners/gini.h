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


#ifndef PIPEFORGE_LEARNERS_GINI_H_
#define PIPEFORGE_LEARNERS_GINI_H_

#include <map>
#include <string>
#include <vector>

#include "pipeforge/learners/predictor.h"
#include "pipeforge/learners/tree.h"

namespace pipeforge::learners {

// Weighted impurity decrease attributed to each feature column of one tree:
// every internal node adds (w*imp - wL*impL - wR*impR) / w_root to the
// column it splits on. Not normalized.
std::vector<double> TreeImpurityDecrease(const Tree& tree, size_t n_features);

// Mean decrease in impurity over all trees of a tree-kind predictor,
// normalized to sum 1. Throws ConfigError for non-tree kinds and
// DegenerateError when no tree has a split or every split has zero gain.
std::map<std::string, double> GiniImportance(const Predictor& predictor);

}  // namespace pipeforge::learners

#endif  // PIPEFORGE_LEARNERS_GINI_H_
