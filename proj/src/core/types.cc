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

#include "pipeforge/core/types.h"

#include "pipeforge/core/errors.h"

namespace pipeforge {

std::string_view NoiseModeName(NoiseMode mode) {
  switch (mode) {
    case NoiseMode::kEmpty: return "empty";
    case NoiseMode::kPartial: return "partial";
    case NoiseMode::kSpurious: return "spurious";
  }
  return "empty";
}

NoiseMode NoiseModeFromName(std::string_view name) {
  if (name == "empty") return NoiseMode::kEmpty;
  if (name == "partial") return NoiseMode::kPartial;
  if (name == "spurious") return NoiseMode::kSpurious;
  throw ParseError("unknown noise mode '" + std::string(name) + "'");
}

std::string_view CompareOpName(CompareOp op) {
  switch (op) {
    case CompareOp::kLess: return "<";
    case CompareOp::kLessEqual: return "<=";
    case CompareOp::kEqual: return "==";
    case CompareOp::kGreaterEqual: return ">=";
    case CompareOp::kGreater: return ">";
  }
  return "?";
}

CompareOp CompareOpFromName(std::string_view name) {
  if (name == "<") return CompareOp::kLess;
  if (name == "<=") return CompareOp::kLessEqual;
  if (name == "==") return CompareOp::kEqual;
  if (name == ">=") return CompareOp::kGreaterEqual;
  if (name == ">") return CompareOp::kGreater;
  throw ParseError("unknown comparison operator '" + std::string(name) + "'");
}

bool Compare(double lhs, CompareOp op, double rhs) {
  switch (op) {
    case CompareOp::kLess: return lhs < rhs;
    case CompareOp::kLessEqual: return lhs <= rhs;
    case CompareOp::kEqual: return lhs == rhs;
    case CompareOp::kGreaterEqual: return lhs >= rhs;
    case CompareOp::kGreater: return lhs > rhs;
  }
  return false;
}

}  // namespace pipeforge
