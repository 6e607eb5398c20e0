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


#include "pipeforge/optimiser/compose.h"

#include <algorithm>
#include <set>

#include "pipeforge/core/errors.h"

namespace pipeforge::optimiser {
namespace {

std::vector<std::string_view> SplitList(std::string_view s) {
  std::vector<std::string_view> out;
  while (!s.empty()) {
    const size_t comma = s.find(',');
    std::string_view part = s.substr(0, comma);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty()) out.push_back(part);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

size_t Goal::KFor(QATask task) const {
  auto it = k.find(task);
  return it == k.end() ? 1 : it->second;
}

void Goal::Validate() const {
  if (tasks.empty()) throw ConfigError("goal has no tasks");
  std::set<QATask> seen;
  for (QATask t : tasks) {
    if (!seen.insert(t).second) {
      throw ConfigError("goal lists " + std::string(TaskName(t)) + " twice");
    }
  }
  for (const auto& [task, n] : k) {
    if (n == 0) throw ConfigError("k for " + std::string(TaskName(task)) + " must be >= 1");
  }
}

Goal Goal::Default(bool with_class) {
  Goal g;
  g.tasks = {QATask::kNED, QATask::kRL};
  if (with_class) g.tasks.push_back(QATask::kCL);
  g.tasks.push_back(QATask::kQB);
  return g;
}

Goal Goal::Parse(std::string_view tasks, std::string_view k) {
  Goal g;
  for (auto name : SplitList(tasks)) g.tasks.push_back(TaskFromName(name));
  for (auto item : SplitList(k)) {
    const size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("k entries look like NED=2, got '" + std::string(item) + "'");
    }
    const std::string value(item.substr(eq + 1));
    size_t used = 0;
    long n = 0;
    try {
      n = std::stol(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || n < 1) {
      throw ParseError("invalid k value '" + value + "'");
    }
    g.k[TaskFromName(item.substr(0, eq))] = static_cast<size_t>(n);
  }
  g.Validate();
  return g;
}

nlohmann::json Goal::ToJson() const {
  nlohmann::json names = nlohmann::json::array();
  nlohmann::json ks = nlohmann::json::object();
  for (QATask t : tasks) {
    names.push_back(std::string(TaskName(t)));
    ks[std::string(TaskName(t))] = KFor(t);
  }
  return {{"tasks", names}, {"k", ks}};
}

std::string PipelinePlan::Key() const {
  std::string key;
  for (QATask t : tasks) {
    if (!key.empty()) key += '|';
    key += Chosen(t);
  }
  return key;
}

nlohmann::json PipelinePlan::ToJson() const {
  nlohmann::json per_task = nlohmann::json::array();
  for (QATask t : tasks) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [id, score] : choices.at(t)) {
      list.push_back({{"component", id}, {"score", score}});
    }
    per_task.push_back({{"task", std::string(TaskName(t))}, {"choices", list}});
  }
  return {{"tasks", per_task}, {"estimated_quality", estimated_quality}};
}

std::vector<PipelinePlan> Compose(const Goal& goal,
                                  const std::map<QATask, RankedComponents>& rankings) {
  goal.Validate();
  std::vector<std::vector<std::pair<std::string, double>>> slices;
  for (QATask t : goal.tasks) {
    auto it = rankings.find(t);
    if (it == rankings.end()) {
      throw ConfigError("no component ranking for goal task " + std::string(TaskName(t)));
    }
    const size_t k = goal.KFor(t);
    if (k > it->second.entries.size()) {
      throw RangeError("k=" + std::to_string(k) + " for " + std::string(TaskName(t)) +
                       " exceeds its " + std::to_string(it->second.entries.size()) +
                       " ranked components");
    }
    slices.emplace_back(it->second.entries.begin(),
                        it->second.entries.begin() + static_cast<std::ptrdiff_t>(k));
  }

  struct Candidate {
    PipelinePlan plan;
    std::vector<size_t> ranks;
    std::string key;
  };
  std::vector<Candidate> candidates;
  std::vector<size_t> pick(slices.size(), 0);
  while (true) {
    PipelinePlan plan;
    plan.tasks = goal.tasks;
    plan.estimated_quality = 1.0;
    for (size_t t = 0; t < slices.size(); ++t) {
      auto& list = plan.choices[goal.tasks[t]];
      list.push_back(slices[t][pick[t]]);
      for (size_t j = 0; j < slices[t].size(); ++j) {
        if (j != pick[t]) list.push_back(slices[t][j]);
      }
      plan.estimated_quality *= slices[t][pick[t]].second;
    }
    std::string key = plan.Key();
    candidates.push_back({std::move(plan), pick, std::move(key)});
    size_t t = slices.size();
    while (t > 0 && ++pick[t - 1] == slices[t - 1].size()) pick[--t] = 0;
    if (t == 0) break;
  }
  // Equal products fall back to rank positions, so the plan made of every
  // task's head always leads, then to the joined ids.
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.plan.estimated_quality != b.plan.estimated_quality) {
                return a.plan.estimated_quality > b.plan.estimated_quality;
              }
              if (a.ranks != b.ranks) return a.ranks < b.ranks;
              return a.key < b.key;
            });
  std::vector<PipelinePlan> plans;
  plans.reserve(candidates.size());
  for (auto& c : candidates) plans.push_back(std::move(c.plan));
  return plans;
}

}  // namespace pipeforge::optimiser
