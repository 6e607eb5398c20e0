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


#ifndef PIPEFORGE_OPTIMISER_COMPOSE_H_
#define PIPEFORGE_OPTIMISER_COMPOSE_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/task.h"
#include "pipeforge/optimiser/selector.h"

namespace pipeforge::optimiser {

// Ordered tasks to solve and how many top-ranked components to combine per
// task (missing entries mean 1).
struct Goal {
  std::vector<QATask> tasks;
  std::map<QATask, size_t> k;

  size_t KFor(QATask task) const;
  // Throws ConfigError on an empty or repeated task list, or k = 0.
  void Validate() const;

  // NED, RL, (CL,) QB.
  static Goal Default(bool with_class = false);
  // Tasks as "NED,RL,QB"; k as "NED=2,RL=1".
  static Goal Parse(std::string_view tasks, std::string_view k = "");

  nlohmann::json ToJson() const;
};

// One pipeline: for each goal task, the chosen component first, followed
// by the remaining top-k alternatives in rank order (used as fallbacks
// when execution allows it).
struct PipelinePlan {
  std::vector<QATask> tasks;
  std::map<QATask, std::vector<std::pair<std::string, double>>> choices;
  double estimated_quality = 0.0;  // product of the chosen scores

  const std::string& Chosen(QATask task) const { return choices.at(task).front().first; }
  // Chosen ids joined with '|' in goal order; orders equal-quality plans.
  std::string Key() const;

  nlohmann::json ToJson() const;
};

// Cartesian product of the top-k slices, best estimated quality first.
// Equal qualities order by the chosen components' rank positions, then by
// Key(). Throws RangeError when k exceeds a ranking's length and
// ConfigError when a goal task has no ranking.
std::vector<PipelinePlan> Compose(const Goal& goal,
                                  const std::map<QATask, RankedComponents>& rankings);

}  // namespace pipeforge::optimiser

#endif  // PIPEFORGE_OPTIMISER_COMPOSE_H_
