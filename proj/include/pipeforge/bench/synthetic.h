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


#ifndef PIPEFORGE_BENCH_SYNTHETIC_H_
#define PIPEFORGE_BENCH_SYNTHETIC_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pipeforge/components/registry.h"
#include "pipeforge/core/types.h"
#include "pipeforge/features/embeddings.h"

namespace pipeforge::bench {

using EmbeddingRows = std::vector<std::pair<std::string, std::vector<double>>>;

struct SyntheticSpec {
  size_t n_questions = 1000;
  uint64_t seed = 42;
  // Width of the generated word vectors; 0 skips embedding generation.
  size_t embedding_dim = 16;
  // Registered as-is into the corpus registry.
  std::vector<Component> components;
  std::string scenario = "synthetic";
};

struct SyntheticCorpus {
  std::vector<Question> questions;
  components::Registry registry;
  // One vector per corpus word and lexicon word, sorted by token.
  EmbeddingRows embeddings;

  features::EmbeddingTable Table() const;
};

// Template-generated questions over the bundled gazetteer's entities, each
// with NED, RL and QB gold, plus CL gold for class questions. Byte-for-byte
// deterministic per seed.
SyntheticCorpus GenerateSynthetic(const SyntheticSpec& spec);

// Text embedding format with a `count dim` header; values use six decimals,
// and the in-memory rows are rounded the same way so a reload is exact.
void WriteEmbeddings(std::ostream& out, const EmbeddingRows& rows);
void SaveEmbeddings(const std::filesystem::path& path, const EmbeddingRows& rows);

// Surface phrase (lower case) -> IRI for entities, relations and classes.
const std::map<std::string, std::string>& EntityLexicon();
const std::map<std::string, std::string>& RelationLexicon();
const std::map<std::string, std::string>& ClassLexicon();

// Simulated component sets:
//   baseline        18 NED, 5 RL, 2 CL, 2 QB with feature-keyed rules
//   new-components  earl-ned 0.54, falcon-ned 0.73, ambiverse-ned 0.65,
//                   earl-rl 0.27, falcon-rl 0.56 (flat success rates)
//   planted-ned     five NED components that succeed exactly when one
//                   surface property holds, plus one 0.3 noise component
enum class ComponentPreset { kBaseline, kNewComponents, kPlantedNed };

std::string_view ComponentPresetName(ComponentPreset preset);
ComponentPreset ComponentPresetFromName(std::string_view name);
std::vector<Component> PresetComponents(ComponentPreset preset, uint64_t seed = 0);

}  // namespace pipeforge::bench

#endif  // PIPEFORGE_BENCH_SYNTHETIC_H_
