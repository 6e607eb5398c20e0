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


#ifndef PIPEFORGE_COMPONENTS_REGISTRY_H_
#define PIPEFORGE_COMPONENTS_REGISTRY_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/performance_matrix.h"
#include "pipeforge/core/types.h"

namespace pipeforge::components {

// Components keyed by id. NER components are filed under NED on
// registration: entity recognition is only ever run chained with
// disambiguation, so the two count as one task.
class Registry {
 public:
  explicit Registry(std::string scenario = "") : scenario_(std::move(scenario)) {}

  // Throws ValidationError on duplicate or empty ids.
  void Register(Component component);

  // Throws ConfigError when the id is unknown.
  const Component& Get(const std::string& id) const;
  const Component* Find(const std::string& id) const;

  // Sorted by id.
  std::vector<const Component*> ComponentsFor(QATask task) const;
  std::vector<std::string> IdsFor(QATask task) const;

  // Every task with at least one component.
  std::map<QATask, size_t> Counts() const;
  // e.g. "NED=18 RL=5 CL=2 QB=2".
  std::string CountsLabel() const;

  const std::string& scenario() const { return scenario_; }
  void set_scenario(std::string s) { scenario_ = std::move(s); }
  size_t size() const { return components_.size(); }
  const std::map<std::string, Component>& components() const { return components_; }

  // Scenario file: either a JSON array of components or
  // {"scenario": label, "components": [...]}.
  nlohmann::json ToJson() const;
  static Registry FromJson(const nlohmann::json& j, std::string default_scenario = "");
  // A bare array takes its scenario label from the file stem.
  static Registry Load(const std::filesystem::path& path);
  void Save(const std::filesystem::path& path) const;

  bool operator==(const Registry&) const = default;

 private:
  std::string scenario_;
  std::map<std::string, Component> components_;
};

// Union of two registries; ids must not collide.
Registry Merge(const Registry& base, const Registry& extra, std::string scenario);

// Keeps, for every task in `keep`, the `keep[task]` components with the
// highest mean F over the matrix (ties by id); other tasks are untouched.
// Components with no matrix entries rank last.
Registry PruneByMeanF(const Registry& registry, const PerformanceMatrix& matrix,
                      const std::map<QATask, size_t>& keep, std::string scenario);

}  // namespace pipeforge::components

#endif  // PIPEFORGE_COMPONENTS_REGISTRY_H_
