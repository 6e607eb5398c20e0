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

#include "pipeforge/core/dataset.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>

#include "pipeforge/core/errors.h"
#include "pipeforge/core/triples.h"

namespace pipeforge {
namespace {

using nlohmann::json;

bool IsBlank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::string StripSpace(const std::string& s) {
  std::string out;
  for (unsigned char c : s) {
    if (!std::isspace(c)) out += static_cast<char>(c);
  }
  return out;
}

// Patterns already in canonical form are kept verbatim so that
// serialization round-trips.
bool IsCanonicalPattern(const std::string& pattern) {
  size_t terms = 0;
  size_t pos = 0;
  while (pos < pattern.size()) {
    const size_t end = std::min(pattern.find(' ', pos), pattern.size());
    const std::string term = pattern.substr(pos, end - pos);
    ++terms;
    const bool iri = term.size() > 2 && term.front() == '<' && term.back() == '>';
    const bool var = term.size() > 2 && term.starts_with("?v") &&
                     std::all_of(term.begin() + 2, term.end(), [](unsigned char c) {
                       return std::isdigit(c);
                     });
    const bool literal = !term.empty() && (term.front() == '"' ||
                                           std::isdigit(static_cast<unsigned char>(term.front())));
    if (!iri && !var && !literal) return false;
    pos = end + 1;
  }
  return terms == 3;
}

std::string StringField(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ParseError(std::string("missing string field '") + key + "'");
  }
  return j.at(key).get<std::string>();
}

json ProfileToJson(const SimProfile& p) {
  json rules = json::array();
  for (const SimRule& rule : p.rules) {
    json when = json::array();
    for (const Condition& c : rule.when) {
      when.push_back({{"feature", c.feature},
                      {"op", std::string(CompareOpName(c.op))},
                      {"value", c.value}});
    }
    rules.push_back({{"when", when},
                     {"p", rule.success_probability},
                     {"noise", std::string(NoiseModeName(rule.noise))}});
  }
  json out = {{"rules", rules},
              {"base_rate", p.base_rate},
              {"base_noise", std::string(NoiseModeName(p.base_noise))},
              {"seed", p.seed},
              {"latency_ms", {p.min_latency_ms, p.max_latency_ms}}};
  if (!p.lexicon.empty()) out["lexicon"] = p.lexicon;
  return out;
}

double Probability(const json& j, const char* what) {
  const double p = j.get<double>();
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(std::string(what) + " must lie in [0,1]");
  }
  return p;
}

SimProfile ProfileFromJson(const json& j) {
  SimProfile p;
  if (j.contains("rules")) {
    for (const json& r : j.at("rules")) {
      SimRule rule;
      if (r.contains("when")) {
        for (const json& c : r.at("when")) {
          rule.when.push_back({c.at("feature").get<std::string>(),
                               CompareOpFromName(c.at("op").get<std::string>()),
                               c.at("value").get<double>()});
        }
      }
      rule.success_probability = Probability(r.at("p"), "rule probability");
      if (r.contains("noise")) {
        rule.noise = NoiseModeFromName(r.at("noise").get<std::string>());
      }
      p.rules.push_back(std::move(rule));
    }
  }
  if (j.contains("base_rate")) p.base_rate = Probability(j.at("base_rate"), "base_rate");
  if (j.contains("base_noise")) {
    p.base_noise = NoiseModeFromName(j.at("base_noise").get<std::string>());
  }
  if (j.contains("seed")) p.seed = j.at("seed").get<uint64_t>();
  if (j.contains("lexicon")) {
    p.lexicon = j.at("lexicon").get<std::map<std::string, std::string>>();
  }
  if (j.contains("latency_ms")) {
    const json& l = j.at("latency_ms");
    p.min_latency_ms = l.at(0).get<double>();
    p.max_latency_ms = l.at(1).get<double>();
    if (p.min_latency_ms < 0 || p.max_latency_ms < p.min_latency_ms) {
      throw ValidationError("latency_ms must be [min, max] with 0 <= min <= max");
    }
  }
  return p;
}

}  // namespace

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDuplicateId: return "duplicate-id";
    case ViolationKind::kEmptyId: return "empty-id";
    case ViolationKind::kEmptyText: return "empty-text";
    case ViolationKind::kPosMismatch: return "pos-mismatch";
    case ViolationKind::kEmptyGold: return "empty-gold";
    case ViolationKind::kRelativeIri: return "relative-iri";
  }
  return "?";
}

std::vector<Violation> ValidateDataset(const std::vector<Question>& questions) {
  std::vector<Violation> report;
  std::map<std::string, size_t> first_seen;
  for (size_t i = 0; i < questions.size(); ++i) {
    const Question& q = questions[i];
    auto add = [&](ViolationKind kind, std::string message) {
      report.push_back({i, q.id, kind, std::move(message)});
    };
    if (q.id.empty()) add(ViolationKind::kEmptyId, "id is empty");
    auto [it, inserted] = first_seen.emplace(q.id, i);
    if (!inserted) {
      add(ViolationKind::kDuplicateId,
          "id '" + q.id + "' already used at index " +
              std::to_string(it->second));
    }
    if (IsBlank(q.text)) add(ViolationKind::kEmptyText, "text is blank");
    if (q.precomputed_pos) {
      std::string joined;
      for (const auto& [token, tag] : *q.precomputed_pos) joined += token;
      if (StripSpace(joined) != StripSpace(q.text)) {
        add(ViolationKind::kPosMismatch,
            "pos tokens do not re-concatenate to the text");
      }
    }
    for (const auto& [task, gold] : q.gold) {
      const auto& targets = gold.Targets();
      if (targets.empty()) {
        add(ViolationKind::kEmptyGold,
            "empty gold for " + std::string(TaskName(task)));
      }
      if (task != QATask::kQB) {
        for (const std::string& iri : gold.items) {
          if (!IsAbsoluteIri(iri)) {
            add(ViolationKind::kRelativeIri, "gold IRI '" + iri + "' is not absolute");
          }
        }
      }
    }
  }
  return report;
}

json QuestionToJson(const Question& q) {
  json j = {{"id", q.id}, {"text", q.text}};
  if (!q.gold.empty()) {
    json gold = json::object();
    for (const auto& [task, g] : q.gold) {
      gold[std::string(TaskName(task))] = g.Targets();
    }
    j["gold"] = gold;
  }
  if (q.precomputed_pos) {
    json pos = json::array();
    for (const auto& [token, tag] : *q.precomputed_pos) pos.push_back({token, tag});
    j["pos"] = pos;
  }
  return j;
}

Question QuestionFromJson(const json& j) {
  if (!j.is_object()) throw ParseError("question must be a JSON object");
  Question q;
  q.id = StringField(j, "id");
  q.text = StringField(j, "text");
  if (j.contains("gold")) {
    for (const auto& [name, values] : j.at("gold").items()) {
      GoldAnnotation g;
      g.task = TaskFromName(name);
      auto list = values.get<std::vector<std::string>>();
      if (g.task == QATask::kQB) {
        if (std::all_of(list.begin(), list.end(), IsCanonicalPattern)) {
          g.query_triples = {list.begin(), list.end()};
        } else {
          g.query_triples = CanonicalTripleSet(list);
        }
      } else {
        for (const auto& item : list) g.items.insert(NormalizeIri(item));
      }
      q.gold[g.task] = std::move(g);
    }
  }
  if (j.contains("pos")) {
    PosTagged pos;
    for (const json& pair : j.at("pos")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("question '" + q.id + "': pos entries must be [token, tag]");
      }
      pos.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    }
    q.precomputed_pos = std::move(pos);
  }
  return q;
}

json ComponentToJson(const Component& c) {
  json adapter;
  if (const auto* sim = std::get_if<SimProfile>(&c.adapter)) {
    adapter = {{"kind", "simulated"}, {"profile", ProfileToJson(*sim)}};
  } else {
    const auto& http = std::get<HttpBinding>(c.adapter);
    adapter = {{"kind", "http"},
               {"endpoint", http.endpoint},
               {"timeout_ms", http.timeout_ms},
               {"retries", http.retries}};
  }
  return {{"id", c.id},
          {"name", c.name},
          {"task", std::string(TaskName(c.task))},
          {"adapter", adapter}};
}

Component ComponentFromJson(const json& j) {
  Component c;
  c.id = StringField(j, "id");
  c.name = j.contains("name") ? j.at("name").get<std::string>() : c.id;
  c.task = TaskFromName(StringField(j, "task"));
  if (!j.contains("adapter")) throw ParseError("component '" + c.id + "' has no adapter");
  const json& a = j.at("adapter");
  std::string kind = StringField(a, "kind");
  std::transform(kind.begin(), kind.end(), kind.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (kind == "simulated") {
    c.adapter = ProfileFromJson(a.contains("profile") ? a.at("profile") : json::object());
  } else if (kind == "http") {
    HttpBinding http;
    http.endpoint = StringField(a, "endpoint");
    if (a.contains("timeout_ms")) http.timeout_ms = a.at("timeout_ms").get<int>();
    if (a.contains("retries")) http.retries = a.at("retries").get<int>();
    if (http.timeout_ms <= 0 || http.retries < 0) {
      throw ValidationError("component '" + c.id + "': bad timeout/retries");
    }
    c.adapter = http;
  } else {
    throw ParseError("component '" + c.id + "': unknown adapter kind '" + kind + "'");
  }
  return c;
}

json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void WriteJsonFile(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::vector<Question> ReadQuestions(const std::filesystem::path& path) {
  const json j = ReadJsonFile(path);
  if (!j.is_array()) throw ParseError(path.string() + ": dataset must be a JSON array");
  std::vector<Question> questions;
  questions.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    try {
      questions.push_back(QuestionFromJson(j[i]));
    } catch (const json::exception& e) {
      throw ParseError(path.string() + ": row " + std::to_string(i) + ": " + e.what());
    } catch (const Error& e) {
      throw ParseError(path.string() + ": row " + std::to_string(i) + ": " + e.what());
    }
  }
  return questions;
}

void WriteQuestions(const std::filesystem::path& path,
                    const std::vector<Question>& questions) {
  json j = json::array();
  for (const Question& q : questions) j.push_back(QuestionToJson(q));
  WriteJsonFile(path, j);
}

std::vector<Question> LoadDataset(const std::filesystem::path& path) {
  auto questions = ReadQuestions(path);
  auto report = ValidateDataset(questions);
  if (!report.empty()) {
    std::string message = path.string() + ": " + std::to_string(report.size()) +
                          " validation violation(s)";
    for (const Violation& v : report) {
      message += "\n  row " + std::to_string(v.index) + " (" + v.question_id +
                 "): " + std::string(ViolationKindName(v.kind)) + ": " + v.message;
    }
    throw ValidationError(message);
  }
  return questions;
}

}  // namespace pipeforge
