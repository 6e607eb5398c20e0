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

#ifndef PIPEFORGE_CORE_CSV_H_
#define PIPEFORGE_CORE_CSV_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pipeforge::csv {

// RFC 4180 quoting: fields containing ',', '"' or newlines are quoted.
std::string Escape(std::string_view field);

void WriteRow(std::ostream& out, const std::vector<std::string>& fields);

// Reads one logical row; returns false at end of input. Handles quoted
// fields and a trailing '\r'.
bool ReadRow(std::istream& in, std::vector<std::string>* fields);

}  // namespace pipeforge::csv

#endif  // PIPEFORGE_CORE_CSV_H_
