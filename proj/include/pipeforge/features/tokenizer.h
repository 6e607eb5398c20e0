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

#ifndef PIPEFORGE_FEATURES_TOKENIZER_H_
#define PIPEFORGE_FEATURES_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace pipeforge::features {

// Splits on whitespace, then peels the characters ? . ! , ' " off both ends
// of every chunk as separate single-character tokens. Throws RangeError on
// blank input.
//
//   "Who wrote 'Dune'?" -> Who wrote ' Dune ' ?
std::vector<std::string> Tokenize(std::string_view text);

// A token made only of punctuation characters.
bool IsPunctuation(std::string_view token);

std::string ToLower(std::string_view s);

}  // namespace pipeforge::features

#endif  // PIPEFORGE_FEATURES_TOKENIZER_H_
