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

#include "pipeforge/core/task.h"

#include <algorithm>
#include <cctype>

#include "pipeforge/core/errors.h"

namespace pipeforge {

std::string_view TaskName(QATask task) {
  switch (task) {
    case QATask::kNER: return "NER";
    case QATask::kNED: return "NED";
    case QATask::kRL: return "RL";
    case QATask::kCL: return "CL";
    case QATask::kQB: return "QB";
  }
  return "?";
}

std::optional<QATask> ParseTask(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (QATask task : kAllTasks) {
    if (TaskName(task) == upper) return task;
  }
  return std::nullopt;
}

QATask TaskFromName(std::string_view name) {
  auto task = ParseTask(name);
  if (!task) throw ParseError("unknown QA task '" + std::string(name) + "'");
  return *task;
}

}  // namespace pipeforge
