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


#ifndef PIPEFORGE_COMPONENTS_SCORING_H_
#define PIPEFORGE_COMPONENTS_SCORING_H_

#include <cstdint>
#include <vector>

#include "pipeforge/components/registry.h"
#include "pipeforge/core/performance_matrix.h"
#include "pipeforge/core/types.h"

namespace pipeforge::components {

// Set precision/recall F1 of one prediction against gold, after trimming
// both sides. Throws ValidationError when the tasks differ.
double MicroFScore(const AnnotationSet& predicted, const GoldAnnotation& gold);

// Runs every component on every question that has gold for its task and
// records the F-scores. At most `jobs` invocations are in flight; results do
// not depend on scheduling.
PerformanceMatrix BuildMatrix(const Registry& registry,
                              const std::vector<Question>& questions,
                              uint64_t seed, int jobs = 8);

}  // namespace pipeforge::components

#endif  // PIPEFORGE_COMPONENTS_SCORING_H_
