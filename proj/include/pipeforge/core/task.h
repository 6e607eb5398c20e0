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

#ifndef PIPEFORGE_CORE_TASK_H_
#define PIPEFORGE_CORE_TASK_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace pipeforge {

// The five QA tasks. Iteration order is the declaration order.
enum class QATask { kNER, kNED, kRL, kCL, kQB };

inline constexpr std::array<QATask, 5> kAllTasks = {
    QATask::kNER, QATask::kNED, QATask::kRL, QATask::kCL, QATask::kQB};

// "NER", "NED", "RL", "CL", "QB".
std::string_view TaskName(QATask task);

// Case-insensitive inverse of TaskName.
std::optional<QATask> ParseTask(std::string_view name);

// Like ParseTask but throws ParseError on unknown names.
QATask TaskFromName(std::string_view name);

}  // namespace pipeforge

#endif  // PIPEFORGE_CORE_TASK_H_
