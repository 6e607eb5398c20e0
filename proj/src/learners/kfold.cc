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


#include "pipeforge/learners/kfold.h"

#include <span>

#include "pipeforge/core/errors.h"
#include "pipeforge/core/rng.h"

namespace pipeforge::learners {

std::vector<std::string> FoldPlan::TestIds(int fold) const {
  std::vector<std::string> out;
  for (const auto& id : ids) {
    if (assignments.at(id) == fold) out.push_back(id);
  }
  return out;
}

std::vector<std::string> FoldPlan::TrainIds(int fold) const {
  std::vector<std::string> out;
  for (const auto& id : ids) {
    if (assignments.at(id) != fold) out.push_back(id);
  }
  return out;
}

std::vector<size_t> FoldPlan::FoldSizes() const {
  std::vector<size_t> sizes(k, 0);
  for (const auto& [id, fold] : assignments) ++sizes[fold];
  return sizes;
}

FoldPlan Kfold(const std::vector<std::string>& ids, int k, uint64_t seed) {
  if (k < 2) throw RangeError("k-fold needs k >= 2, got " + std::to_string(k));
  if (ids.size() < static_cast<size_t>(k)) {
    throw RangeError("too few items for " + std::to_string(k) + " folds: " +
                     std::to_string(ids.size()));
  }
  FoldPlan plan;
  plan.k = k;
  plan.ids = ids;
  std::vector<std::string> order = ids;
  Rng rng(DeriveSeed(seed, "kfold"));
  rng.Shuffle(std::span<std::string>(order));
  for (size_t i = 0; i < order.size(); ++i) {
    if (!plan.assignments.emplace(order[i], static_cast<int>(i % k)).second) {
      throw ValidationError("duplicate id '" + order[i] + "' in fold input");
    }
  }
  return plan;
}

}  // namespace pipeforge::learners
