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


#include "pipeforge/components/registry.h"

#include <algorithm>

#include <spdlog/spdlog.h>

#include "pipeforge/core/dataset.h"
#include "pipeforge/core/errors.h"

namespace pipeforge::components {

void Registry::Register(Component component) {
  if (component.id.empty()) throw ValidationError("component id must not be empty");
  if (components_.count(component.id)) {
    throw ValidationError("duplicate component id '" + component.id + "'");
  }
  if (component.task == QATask::kNER) {
    spdlog::debug("component {} registered as NED", component.id);
    component.task = QATask::kNED;
  }
  const std::string id = component.id;
  components_.emplace(id, std::move(component));
}

const Component& Registry::Get(const std::string& id) const {
  const Component* c = Find(id);
  if (c == nullptr) throw ConfigError("unregistered component '" + id + "'");
  return *c;
}

const Component* Registry::Find(const std::string& id) const {
  auto it = components_.find(id);
  return it == components_.end() ? nullptr : &it->second;
}

std::vector<const Component*> Registry::ComponentsFor(QATask task) const {
  std::vector<const Component*> out;
  for (const auto& [id, c] : components_) {
    if (c.task == task) out.push_back(&c);
  }
  return out;
}

std::vector<std::string> Registry::IdsFor(QATask task) const {
  std::vector<std::string> out;
  for (const auto* c : ComponentsFor(task)) out.push_back(c->id);
  return out;
}

std::map<QATask, size_t> Registry::Counts() const {
  std::map<QATask, size_t> counts;
  for (const auto& [id, c] : components_) ++counts[c.task];
  return counts;
}

std::string Registry::CountsLabel() const {
  std::string out;
  for (const auto& [task, n] : Counts()) {
    if (!out.empty()) out += ' ';
    out += std::string(TaskName(task)) + "=" + std::to_string(n);
  }
  return out;
}

nlohmann::json Registry::ToJson() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [id, c] : components_) list.push_back(ComponentToJson(c));
  return {{"scenario", scenario_}, {"components", list}};
}

Registry Registry::FromJson(const nlohmann::json& j, std::string default_scenario) {
  const nlohmann::json* list = &j;
  Registry r(std::move(default_scenario));
  if (j.is_object()) {
    if (j.contains("scenario")) r.scenario_ = j.at("scenario").get<std::string>();
    list = &j.at("components");
  }
  if (!list->is_array()) throw ParseError("registry must be a JSON array of components");
  for (const auto& c : *list) r.Register(ComponentFromJson(c));
  return r;
}

Registry Registry::Load(const std::filesystem::path& path) {
  try {
    return FromJson(ReadJsonFile(path), path.stem().string());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void Registry::Save(const std::filesystem::path& path) const {
  WriteJsonFile(path, ToJson());
}

Registry Merge(const Registry& base, const Registry& extra, std::string scenario) {
  Registry out(std::move(scenario));
  for (const auto& [id, c] : base.components()) out.Register(c);
  for (const auto& [id, c] : extra.components()) out.Register(c);
  return out;
}

Registry PruneByMeanF(const Registry& registry, const PerformanceMatrix& matrix,
                      const std::map<QATask, size_t>& keep, std::string scenario) {
  Registry out(std::move(scenario));
  for (QATask task : kAllTasks) {
    auto members = registry.ComponentsFor(task);
    auto it = keep.find(task);
    if (it != keep.end() && it->second < members.size()) {
      std::vector<std::pair<double, const Component*>> scored;
      for (const auto* c : members) {
        scored.emplace_back(matrix.MeanFor(c->id).value_or(-1.0), c);
      }
      std::stable_sort(scored.begin(), scored.end(),
                       [](const auto& a, const auto& b) { return a.first > b.first; });
      scored.resize(it->second);
      members.clear();
      for (const auto& [mean, c] : scored) members.push_back(c);
    }
    for (const auto* c : members) out.Register(*c);
  }
  return out;
}

}  // namespace pipeforge::components
