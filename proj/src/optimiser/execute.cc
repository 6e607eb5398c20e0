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


#include "pipeforge/optimiser/execute.h"

#include "pipeforge/components/adapters.h"
#include "pipeforge/components/scoring.h"
#include "pipeforge/core/triples.h"

namespace pipeforge::optimiser {

std::string NaiveSparql(const std::string& entity, const std::string& relation) {
  return "SELECT ?v0 { <" + ExpandIri(entity) + "> <" + ExpandIri(relation) + "> ?v0 . }";
}

ExecutionResult Execute(const PipelinePlan& plan, const Question& question,
                        const components::Registry& registry,
                        const ExecuteOptions& options) {
  ExecutionResult result;
  for (QATask task : plan.tasks) {
    const auto& choices = plan.choices.at(task);
    const size_t tries = options.fallback ? choices.size() : 1;
    AnnotationSet output;
    for (size_t i = 0; i < tries; ++i) {
      const Component& c = registry.Get(choices[i].first);
      output = components::Invoke(c, question, options.seed);
      Attempt attempt{task, output, std::nullopt};
      if (const GoldAnnotation* gold = question.GoldFor(task)) {
        attempt.f_score = components::MicroFScore(output, *gold);
      }
      result.trace.push_back(std::move(attempt));
      if (!output.items.empty()) break;
    }
    result.outputs[task] = std::move(output);
  }
  if (!plan.tasks.empty() && plan.tasks.back() == QATask::kQB) {
    auto ned = result.outputs.find(QATask::kNED);
    auto rl = result.outputs.find(QATask::kRL);
    if (ned != result.outputs.end() && rl != result.outputs.end() &&
        ned->second.items.size() == 1 && rl->second.items.size() == 1) {
      result.sparql = NaiveSparql(*ned->second.items.begin(), *rl->second.items.begin());
    }
  }
  return result;
}

nlohmann::json ExecutionResult::ToJson() const {
  nlohmann::json steps = nlohmann::json::array();
  for (const Attempt& a : trace) {
    nlohmann::json step = {{"task", std::string(TaskName(a.task))},
                           {"component", a.output.source_component},
                           {"latency_ms", a.output.latency_ms},
                           {"failed", a.output.failed},
                           {"items", a.output.items}};
    if (a.f_score) step["f_score"] = *a.f_score;
    steps.push_back(std::move(step));
  }
  nlohmann::json j = {{"trace", steps}};
  j["sparql"] = sparql ? nlohmann::json(*sparql) : nlohmann::json(nullptr);
  return j;
}

}  // namespace pipeforge::optimiser
