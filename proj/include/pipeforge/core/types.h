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

#ifndef PIPEFORGE_CORE_TYPES_H_
#define PIPEFORGE_CORE_TYPES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pipeforge/core/task.h"

namespace pipeforge {

// Gold labels of one question for one task. NED/RL/CL use `items` (IRIs);
// QB uses `query_triples` (canonical triple patterns, see triples.h).
struct GoldAnnotation {
  QATask task = QATask::kNED;
  std::set<std::string> items;
  std::set<std::string> query_triples;

  // The set a component's output is compared against.
  const std::set<std::string>& Targets() const {
    return task == QATask::kQB ? query_triples : items;
  }

  bool operator==(const GoldAnnotation&) const = default;
};

using PosTagged = std::vector<std::pair<std::string, std::string>>;

struct Question {
  std::string id;
  std::string text;
  std::map<QATask, GoldAnnotation> gold;
  std::optional<PosTagged> precomputed_pos;

  const GoldAnnotation* GoldFor(QATask task) const {
    auto it = gold.find(task);
    return it == gold.end() ? nullptr : &it->second;
  }

  bool operator==(const Question&) const = default;
};

// Output of one component invocation.
struct AnnotationSet {
  QATask task = QATask::kNED;
  std::set<std::string> items;
  std::string source_component;
  double latency_ms = 0.0;
  // Transport or protocol failure; items is empty when set.
  bool failed = false;

  bool operator==(const AnnotationSet&) const = default;
};

// ---------------------------------------------------------------------------
// Component descriptions. Behaviour lives in components/; these are plain
// values so registries can be serialized and compared.

enum class NoiseMode { kEmpty, kPartial, kSpurious };

enum class CompareOp { kLess, kLessEqual, kEqual, kGreaterEqual, kGreater };

// `feature <op> value` over the named question features (CF2 names plus
// "gold_items", the number of gold targets of the component's task).
struct Condition {
  std::string feature;
  CompareOp op = CompareOp::kGreaterEqual;
  double value = 0.0;

  bool operator==(const Condition&) const = default;
};

// Fires when every condition holds (an empty list always fires).
struct SimRule {
  std::vector<Condition> when;
  double success_probability = 1.0;
  NoiseMode noise = NoiseMode::kEmpty;

  bool operator==(const SimRule&) const = default;
};

// Seeded success model standing in for a real service. Rules are evaluated
// first-match; questions matching no rule use base_rate/base_noise.
struct SimProfile {
  std::vector<SimRule> rules;
  double base_rate = 0.0;
  NoiseMode base_noise = NoiseMode::kEmpty;
  uint64_t seed = 0;
  // Surface form (lower-case, may span tokens) -> IRI. Used to answer
  // questions that carry no gold for the component's task.
  std::map<std::string, std::string> lexicon;
  // Synthetic latency is drawn uniformly from this range.
  double min_latency_ms = 5.0;
  double max_latency_ms = 50.0;

  bool operator==(const SimProfile&) const = default;
};

struct HttpBinding {
  std::string endpoint;
  int timeout_ms = 5000;
  int retries = 0;

  bool operator==(const HttpBinding&) const = default;
};

using AdapterBinding = std::variant<SimProfile, HttpBinding>;

struct Component {
  std::string id;
  std::string name;
  QATask task = QATask::kNED;
  AdapterBinding adapter;

  bool operator==(const Component&) const = default;
};

std::string_view NoiseModeName(NoiseMode mode);
NoiseMode NoiseModeFromName(std::string_view name);
std::string_view CompareOpName(CompareOp op);
CompareOp CompareOpFromName(std::string_view name);
bool Compare(double lhs, CompareOp op, double rhs);

}  // namespace pipeforge

#endif  // PIPEFORGE_CORE_TYPES_H_
