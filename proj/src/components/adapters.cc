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


#include "pipeforge/components/adapters.h"

#include <chrono>
#include <iterator>
#include <vector>

#include <httplib.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include "pipeforge/core/errors.h"
#include "pipeforge/core/rng.h"
#include "pipeforge/core/triples.h"
#include "pipeforge/features/tokenizer.h"

namespace pipeforge::components {
namespace {

constexpr size_t kMaxNgram = 4;
constexpr std::string_view kSpuriousBase = "http://pipeforge.invalid/spurious/";

const SimRule* MatchRule(const SimProfile& profile, const SimFeatures& features,
                         const std::string& component_id) {
  for (const SimRule& rule : profile.rules) {
    bool fires = true;
    for (const Condition& c : rule.when) {
      auto it = features.find(c.feature);
      if (it == features.end()) {
        throw ConfigError("component " + component_id + ": unknown feature '" +
                          c.feature + "' in simulation rule");
      }
      if (!Compare(it->second, c.op, c.value)) {
        fires = false;
        break;
      }
    }
    if (fires) return &rule;
  }
  return nullptr;
}

std::set<std::string> ApplyNoise(NoiseMode mode, const std::set<std::string>& targets,
                                 const std::string& component_id, Rng& rng) {
  switch (mode) {
    case NoiseMode::kEmpty:
      return {};
    case NoiseMode::kPartial: {
      std::set<std::string> out = targets;
      if (!out.empty()) {
        out.erase(std::next(out.begin(), static_cast<std::ptrdiff_t>(rng.Below(out.size()))));
      }
      return out;
    }
    case NoiseMode::kSpurious: {
      std::set<std::string> out = targets;
      out.insert(std::string(kSpuriousBase) + component_id + "/" +
                 std::to_string(rng.Below(1000)));
      return out;
    }
  }
  return {};
}

// Splits "http://host:port/path" into ("http://host:port", "/path").
std::pair<std::string, std::string> SplitEndpoint(const std::string& endpoint) {
  const size_t scheme = endpoint.find("://");
  const size_t slash =
      endpoint.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  if (slash == std::string::npos) return {endpoint, "/"};
  return {endpoint.substr(0, slash), endpoint.substr(slash)};
}

}  // namespace

const features::FeatureExtractor& SimulationExtractor() {
  static const features::FeatureExtractor extractor = features::FeatureExtractor::Default();
  return extractor;
}

SimFeatures SimulationFeatures(const Question& question, QATask task,
                               const features::FeatureExtractor& extractor) {
  features::FeatureConfig config;
  config.variant = features::FeatureSet::kCF2;
  config.for_task = QATask::kRL;  // keeps the entity-type dims
  const auto fv = extractor.Extract(question, config);
  SimFeatures out;
  for (size_t i = 0; i < fv.size(); ++i) out.emplace(fv.names[i], fv.values[i]);
  const GoldAnnotation* gold = question.GoldFor(task);
  out["gold_items"] = gold ? static_cast<double>(gold->Targets().size()) : 0.0;
  return out;
}

std::set<std::string> SimulationTargets(const SimProfile& profile, QATask task,
                                        const Question& question) {
  if (const GoldAnnotation* gold = question.GoldFor(task)) return gold->Targets();
  std::set<std::string> out;
  if (profile.lexicon.empty()) return out;
  std::vector<std::string> words;
  for (const auto& t : features::Tokenize(question.text)) {
    if (!features::IsPunctuation(t)) words.push_back(features::ToLower(t));
  }
  for (size_t i = 0; i < words.size(); ++i) {
    std::string phrase;
    for (size_t n = 0; n < kMaxNgram && i + n < words.size(); ++n) {
      if (n > 0) phrase += ' ';
      phrase += words[i + n];
      auto it = profile.lexicon.find(phrase);
      if (it != profile.lexicon.end()) out.insert(ExpandIri(it->second));
    }
  }
  return out;
}

AnnotationSet InvokeSimulated(const Component& component, const SimProfile& profile,
                              const Question& question, uint64_t seed,
                              const SimFeatures* features) {
  SimFeatures local;
  if (features == nullptr && !profile.rules.empty()) {
    local = SimulationFeatures(question, component.task, SimulationExtractor());
    features = &local;
  }
  const SimRule* rule =
      profile.rules.empty() ? nullptr : MatchRule(profile, *features, component.id);
  const double p = rule ? rule->success_probability : profile.base_rate;
  const NoiseMode noise = rule ? rule->noise : profile.base_noise;

  uint64_t stream = DeriveSeed(seed, profile.seed);
  stream = DeriveSeed(stream, Fnv1a64(question.id));
  stream = DeriveSeed(stream, Fnv1a64(component.id));
  Rng rng(stream);

  AnnotationSet out;
  out.task = component.task;
  out.source_component = component.id;
  const std::set<std::string> targets = SimulationTargets(profile, component.task, question);
  out.items = rng.Bernoulli(p) ? targets : ApplyNoise(noise, targets, component.id, rng);
  out.latency_ms = rng.Uniform(profile.min_latency_ms, profile.max_latency_ms);
  return out;
}

AnnotationSet InvokeHttp(const Component& component, const HttpBinding& binding,
                         const Question& question) {
  AnnotationSet out;
  out.task = component.task;
  out.source_component = component.id;
  const auto [base, path] = SplitEndpoint(binding.endpoint);
  const std::string body = nlohmann::json{{"question", question.text}}.dump();
  const auto start = std::chrono::steady_clock::now();
  std::string problem;
  for (int attempt = 0; attempt <= binding.retries; ++attempt) {
    problem.clear();
    try {
      httplib::Client client(base);
      const auto timeout = std::chrono::milliseconds(binding.timeout_ms);
      client.set_connection_timeout(timeout);
      client.set_read_timeout(timeout);
      client.set_write_timeout(timeout);
      const auto res = client.Post(path, body, "application/json");
      if (!res) {
        problem = "transport error: " + httplib::to_string(res.error());
      } else if (res->status != 200) {
        problem = "HTTP status " + std::to_string(res->status);
      } else {
        const auto j = nlohmann::json::parse(res->body);
        std::vector<std::string> items;
        for (const auto& item : j.at("items")) items.push_back(NormalizeIri(item.get<std::string>()));
        if (component.task == QATask::kQB) {
          out.items = CanonicalTripleSet(items);
        } else {
          out.items.insert(items.begin(), items.end());
        }
      }
    } catch (const std::exception& e) {
      out.items.clear();
      problem = std::string("malformed response: ") + e.what();
    }
    if (problem.empty()) break;
  }
  out.latency_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start).count();
  if (!problem.empty()) {
    spdlog::warn("component {} at {} failed on question {}: {}", component.id,
                 binding.endpoint, question.id, problem);
    out.failed = true;
    out.items.clear();
  }
  return out;
}

AnnotationSet Invoke(const Component& component, const Question& question,
                     uint64_t seed, const SimFeatures* features) {
  if (const auto* profile = std::get_if<SimProfile>(&component.adapter)) {
    return InvokeSimulated(component, *profile, question, seed, features);
  }
  return InvokeHttp(component, std::get<HttpBinding>(component.adapter), question);
}

}  // namespace pipeforge::components
