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


#ifndef PIPEFORGE_OPTIMISER_EXECUTE_H_
#define PIPEFORGE_OPTIMISER_EXECUTE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipeforge/components/registry.h"
#include "pipeforge/core/types.h"
#include "pipeforge/optimiser/compose.h"

namespace pipeforge::optimiser {

struct ExecuteOptions {
  uint64_t seed = 42;
  // Try the next alternative of a task when its component returns nothing.
  bool fallback = false;
};

// One component invocation during execution.
struct Attempt {
  QATask task = QATask::kNED;
  AnnotationSet output;
  std::optional<double> f_score;  // when the question has gold for the task
};

struct ExecutionResult {
  std::map<QATask, AnnotationSet> outputs;
  std::vector<Attempt> trace;
  std::optional<std::string> sparql;

  nlohmann::json ToJson() const;
};

// `SELECT ?v0 { <entity> <relation> ?v0 . }` with both IRIs expanded.
std::string NaiveSparql(const std::string& entity, const std::string& relation);

// Runs the plan's chosen component per goal task in order. When the goal
// ends in QB and NED and RL produced exactly one item each, the naive
// query above is attached.
ExecutionResult Execute(const PipelinePlan& plan, const Question& question,
                        const components::Registry& registry,
                        const ExecuteOptions& options = {});

}  // namespace pipeforge::optimiser

#endif  // PIPEFORGE_OPTIMISER_EXECUTE_H_
