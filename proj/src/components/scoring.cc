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


#include "pipeforge/components/scoring.h"

#include <optional>
#include <set>

#include <spdlog/spdlog.h>

#include "pipeforge/components/adapters.h"
#include "pipeforge/core/errors.h"
#include "pipeforge/core/parallel.h"
#include "pipeforge/core/triples.h"

namespace pipeforge::components {
namespace {

std::set<std::string> Normalized(const std::set<std::string>& items) {
  std::set<std::string> out;
  for (const auto& i : items) out.insert(NormalizeIri(i));
  return out;
}

bool NeedsFeatures(const Registry& registry) {
  for (const auto& [id, c] : registry.components()) {
    const auto* p = std::get_if<SimProfile>(&c.adapter);
    if (p != nullptr && !p->rules.empty()) return true;
  }
  return false;
}

}  // namespace

double MicroFScore(const AnnotationSet& predicted, const GoldAnnotation& gold) {
  if (predicted.task != gold.task) {
    throw ValidationError("cannot score a " + std::string(TaskName(predicted.task)) +
                          " annotation against " + std::string(TaskName(gold.task)) +
                          " gold");
  }
  const auto p = Normalized(predicted.items);
  const auto g = Normalized(gold.Targets());
  if (p.empty() || g.empty()) return 0.0;
  size_t hits = 0;
  for (const auto& item : p) hits += g.count(item);
  if (hits == 0) return 0.0;
  const double precision = static_cast<double>(hits) / static_cast<double>(p.size());
  const double recall = static_cast<double>(hits) / static_cast<double>(g.size());
  return 2.0 * precision * recall / (precision + recall);
}

PerformanceMatrix BuildMatrix(const Registry& registry,
                              const std::vector<Question>& questions,
                              uint64_t seed, int jobs) {
  struct Job {
    size_t question;
    const Component* component;
  };
  std::vector<Job> work;
  for (size_t q = 0; q < questions.size(); ++q) {
    for (const auto& [id, c] : registry.components()) {
      if (questions[q].GoldFor(c.task) != nullptr) work.push_back({q, &c});
    }
  }

  // Simulation predicates read task-independent features plus the gold
  // count, which is patched per job below.
  std::vector<std::optional<SimFeatures>> features(questions.size());
  if (NeedsFeatures(registry)) {
    ParallelFor(questions.size(), jobs, [&](size_t q) {
      features[q] = SimulationFeatures(questions[q], QATask::kNED, SimulationExtractor());
    });
  }

  std::vector<double> scores(work.size());
  std::vector<char> failed(work.size(), 0);
  ParallelFor(work.size(), jobs, [&](size_t i) {
    const Question& q = questions[work[i].question];
    const Component& c = *work[i].component;
    const GoldAnnotation& gold = *q.GoldFor(c.task);
    std::optional<SimFeatures> local;
    if (features[work[i].question]) {
      local = *features[work[i].question];
      (*local)["gold_items"] = static_cast<double>(gold.Targets().size());
    }
    const AnnotationSet out = Invoke(c, q, seed, local ? &*local : nullptr);
    failed[i] = out.failed;
    scores[i] = MicroFScore(out, gold);
  });

  PerformanceMatrix matrix;
  size_t n_failed = 0;
  for (size_t i = 0; i < work.size(); ++i) {
    matrix.Set(questions[work[i].question].id, work[i].component->id, scores[i]);
    n_failed += failed[i];
  }
  if (n_failed > 0) {
    spdlog::warn("{} of {} invocations failed and scored 0", n_failed, work.size());
  }
  return matrix;
}

}  // namespace pipeforge::components
