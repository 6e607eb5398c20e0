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


#ifndef PIPEFORGE_LEARNERS_KFOLD_H_
#define PIPEFORGE_LEARNERS_KFOLD_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pipeforge::learners {

struct FoldPlan {
  int k = 0;
  std::map<std::string, int> assignments;
  // Input order, kept so fold listings do not depend on map ordering.
  std::vector<std::string> ids;

  // Ids of one fold in input order.
  std::vector<std::string> TestIds(int fold) const;
  std::vector<std::string> TrainIds(int fold) const;
  std::vector<size_t> FoldSizes() const;

  bool operator==(const FoldPlan&) const = default;
};

// Shuffles `ids` with `seed` and deals them round-robin into k folds.
// Throws RangeError when k < 2 or ids.size() < k, ValidationError on
// duplicate ids.
FoldPlan Kfold(const std::vector<std::string>& ids, int k, uint64_t seed);

}  // namespace pipeforge::learners

#endif  // PIPEFORGE_LEARNERS_KFOLD_H_
