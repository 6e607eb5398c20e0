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


#ifndef PIPEFORGE_COMPONENTS_ADAPTERS_H_
#define PIPEFORGE_COMPONENTS_ADAPTERS_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "pipeforge/core/types.h"
#include "pipeforge/features/extractor.h"

namespace pipeforge::components {

using SimFeatures = std::map<std::string, double>;

// Features visible to SimProfile predicates: the CF2 vector (with entity
// types) plus "gold_items", the number of gold targets for `task`.
SimFeatures SimulationFeatures(const Question& question, QATask task,
                               const features::FeatureExtractor& extractor);

// Items a simulated component would emit on success: the gold targets when
// the question has gold for the task, otherwise lexicon hits over token
// n-grams (up to four tokens).
std::set<std::string> SimulationTargets(const SimProfile& profile, QATask task,
                                        const Question& question);

// Deterministic in (seed, profile.seed, question id, component id). Uses
// `features` when given, otherwise extracts them. Throws ConfigError when
// a predicate names an unknown feature.
AnnotationSet InvokeSimulated(const Component& component, const SimProfile& profile,
                              const Question& question, uint64_t seed,
                              const SimFeatures* features = nullptr);

// POSTs {"question": text} and expects {"items": [...]} with status 200.
// Transport, status and payload problems yield failed=true with no items;
// nothing is thrown. QB items are canonicalized.
AnnotationSet InvokeHttp(const Component& component, const HttpBinding& binding,
                         const Question& question);

// Dispatches on the adapter kind.
AnnotationSet Invoke(const Component& component, const Question& question,
                     uint64_t seed, const SimFeatures* features = nullptr);

// Extractor with the bundled lexicons, shared by the simulation paths.
const features::FeatureExtractor& SimulationExtractor();

}  // namespace pipeforge::components

#endif  // PIPEFORGE_COMPONENTS_ADAPTERS_H_
