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


#include "pipeforge/bench/synthetic.h"

#include <array>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "pipeforge/core/errors.h"
#include "pipeforge/core/rng.h"
#include "pipeforge/core/triples.h"
#include "pipeforge/features/lexicons.h"
#include "pipeforge/features/tokenizer.h"

namespace pipeforge::bench {
namespace {

struct Entity {
  std::string surface;
  std::string type;
  std::string iri;
};

enum class Ask { kWhat, kWho, kWhen, kHowMany };

struct Relation {
  std::string_view subject_type;
  std::string_view phrase;
  std::string_view iri;
  Ask ask;
  std::string_view verb = "";         // "Who <verb> X?" / "When was X <verb>?"
  std::string_view object_type = "";  // enables "Is O the <phrase> of X?"
  bool yearly = false;                // "What was the <phrase> of X in 1990?"
};

constexpr Relation kRelations[] = {
    {"COUNTRY", "capital", "dbo:capital", Ask::kWhat, "", "CITY"},
    {"COUNTRY", "timezone", "dbo:timeZone", Ask::kWhat},
    {"COUNTRY", "currency", "dbo:currency", Ask::kWhat},
    {"COUNTRY", "official language", "dbo:officialLanguage", Ask::kWhat, "", "LANGUAGE"},
    {"COUNTRY", "population", "dbo:populationTotal", Ask::kWhat, "", "", true},
    {"COUNTRY", "inhabitants", "dbo:populationTotal", Ask::kHowMany},
    {"COUNTRY", "president", "dbo:leader", Ask::kWho, "leads"},
    {"CITY", "mayor", "dbo:leaderName", Ask::kWho, "governs"},
    {"CITY", "population", "dbo:populationTotal", Ask::kWhat, "", "", true},
    {"CITY", "inhabitants", "dbo:populationTotal", Ask::kHowMany},
    {"CITY", "timezone", "dbo:timeZone", Ask::kWhat},
    {"CITY", "country", "dbo:country", Ask::kWhat, "", "COUNTRY"},
    {"REGION", "capital", "dbo:capital", Ask::kWhat, "", "CITY"},
    {"REGION", "population", "dbo:populationTotal", Ask::kWhat, "", "", true},
    {"RIVER", "length", "dbo:length", Ask::kWhat},
    {"RIVER", "mouth", "dbo:riverMouth", Ask::kWhat},
    {"RIVER", "source country", "dbo:sourceCountry", Ask::kWhat, "", "COUNTRY"},
    {"MOUNTAIN", "elevation", "dbo:elevation", Ask::kWhat},
    {"MOUNTAIN", "first climber", "dbo:firstAscentPerson", Ask::kWho, "first climbed"},
    {"MOUNTAIN", "location", "dbo:locatedInArea", Ask::kWhat, "", "COUNTRY"},
    {"PERSON", "birth place", "dbo:birthPlace", Ask::kWhat, "", "CITY"},
    {"PERSON", "spouse", "dbo:spouse", Ask::kWho, "married"},
    {"PERSON", "birth date", "dbo:birthDate", Ask::kWhen, "born"},
    {"PERSON", "nationality", "dbo:nationality", Ask::kWhat, "", "COUNTRY"},
    {"ORGANIZATION", "headquarters", "dbo:headquarter", Ask::kWhat, "", "CITY"},
    {"ORGANIZATION", "founder", "dbo:foundedBy", Ask::kWho, "founded"},
    {"ORGANIZATION", "founding date", "dbo:foundingDate", Ask::kWhen, "founded"},
    {"ORGANIZATION", "members", "dbo:numberOfMembers", Ask::kHowMany},
    {"COMPANY", "chief executive", "dbo:keyPerson", Ask::kWho, "runs"},
    {"COMPANY", "founder", "dbo:foundedBy", Ask::kWho, "founded"},
    {"COMPANY", "headquarters", "dbo:headquarter", Ask::kWhat, "", "CITY"},
    {"COMPANY", "revenue", "dbo:revenue", Ask::kWhat, "", "", true},
    {"COMPANY", "employees", "dbo:numberOfEmployees", Ask::kHowMany},
    {"COMPANY", "founding date", "dbo:foundingDate", Ask::kWhen, "founded"},
    {"UNIVERSITY", "president", "dbo:president", Ask::kWho, "leads"},
    {"UNIVERSITY", "city", "dbo:city", Ask::kWhat, "", "CITY"},
    {"UNIVERSITY", "students", "dbo:numberOfStudents", Ask::kHowMany},
    {"UNIVERSITY", "founding date", "dbo:foundingDate", Ask::kWhen, "founded"},
    {"SPORTS_TEAM", "coach", "dbo:coach", Ask::kWho, "coaches"},
    {"SPORTS_TEAM", "stadium", "dbo:ground", Ask::kWhat},
    {"SPORTS_TEAM", "founding date", "dbo:foundingDate", Ask::kWhen, "founded"},
    {"BUILDING", "architect", "dbo:architect", Ask::kWho, "designed"},
    {"BUILDING", "height", "dbo:height", Ask::kWhat},
    {"BUILDING", "location", "dbo:location", Ask::kWhat, "", "CITY"},
    {"BUILDING", "completion date", "dbo:completionDate", Ask::kWhen, "completed"},
    {"FILM", "director", "dbo:director", Ask::kWho, "directed", "PERSON"},
    {"FILM", "budget", "dbo:budget", Ask::kWhat},
    {"FILM", "release date", "dbo:releaseDate", Ask::kWhen, "released"},
    {"BOOK", "author", "dbo:author", Ask::kWho, "wrote", "PERSON"},
    {"BOOK", "publisher", "dbo:publisher", Ask::kWhat},
    {"BOOK", "genre", "dbo:literaryGenre", Ask::kWhat},
    {"MUSIC", "artist", "dbo:artist", Ask::kWho, "recorded"},
    {"MUSIC", "genre", "dbo:genre", Ask::kWhat},
    {"MUSIC", "release date", "dbo:releaseDate", Ask::kWhen, "released"},
    {"SOFTWARE", "developer", "dbo:developer", Ask::kWho, "developed", "COMPANY"},
    {"SOFTWARE", "license", "dbo:license", Ask::kWhat},
    {"SOFTWARE", "programming language", "dbo:programmingLanguage", Ask::kWhat},
    {"EVENT", "location", "dbo:place", Ask::kWhat, "", "CITY"},
    {"EVENT", "casualties", "dbo:casualties", Ask::kHowMany},
    {"LANGUAGE", "language family", "dbo:languageFamily", Ask::kWhat},
    {"LANGUAGE", "speakers", "dbo:numberOfSpeakers", Ask::kHowMany},
    {"LANGUAGE", "writing system", "dbo:writingSystem", Ask::kWhat},
};

// Questions about members of a class related to an entity.
struct ClassTemplate {
  std::string_view text;  // "{}" marks the entity
  std::string_view slot_type;
  std::string_view class_iri;
  std::string_view relation_iri;
  bool entity_is_subject;  // "<E> rel ?x" instead of "?x rel <E>"
};

constexpr ClassTemplate kClassTemplates[] = {
    {"Which river flows through {}?", "CITY", "dbo:River", "dbo:city", false},
    {"How many rivers flow through {}?", "COUNTRY", "dbo:River", "dbo:country", false},
    {"Give me all films directed by {}.", "PERSON", "dbo:Film", "dbo:director", false},
    {"List all books written by {}.", "PERSON", "dbo:Book", "dbo:author", false},
    {"Which companies are located in {}?", "CITY", "dbo:Company", "dbo:location", false},
    {"Which city is the capital of {}?", "COUNTRY", "dbo:City", "dbo:capital", true},
    {"Show me all mountains in {}.", "COUNTRY", "dbo:Mountain", "dbo:locatedInArea", false},
    {"Which universities are in {}?", "CITY", "dbo:University", "dbo:city", false},
    {"How many films did {} direct?", "PERSON", "dbo:Film", "dbo:director", false},
};

// Class word -> class IRI, for "Is X a <word>?".
constexpr std::pair<std::string_view, std::string_view> kClassWords[] = {
    {"city", "dbo:City"},         {"country", "dbo:Country"}, {"river", "dbo:River"},
    {"mountain", "dbo:Mountain"}, {"film", "dbo:Film"},       {"book", "dbo:Book"},
    {"company", "dbo:Company"},   {"person", "dbo:Person"},   {"university", "dbo:University"},
};

std::string EntityIri(std::string_view surface) {
  std::string local(surface);
  for (char& c : local) {
    if (c == ' ') c = '_';
  }
  return ExpandIri("dbr:" + local);
}

const std::vector<Entity>& Entities() {
  static const std::vector<Entity> entities = [] {
    std::vector<Entity> out;
    std::string_view text = features::BundledGazetteerText();
    while (!text.empty()) {
      const size_t nl = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const size_t tab = line.find('\t');
      if (line.empty() || line.front() == '#' || tab == std::string_view::npos) continue;
      const std::string surface(line.substr(0, tab));
      out.push_back({surface, std::string(line.substr(tab + 1)), EntityIri(surface)});
    }
    return out;
  }();
  return entities;
}

const std::vector<Entity>& EntitiesOf(std::string_view type) {
  static const std::map<std::string, std::vector<Entity>, std::less<>> by_type = [] {
    std::map<std::string, std::vector<Entity>, std::less<>> m;
    for (const Entity& e : Entities()) m[e.type].push_back(e);
    return m;
  }();
  auto it = by_type.find(type);
  if (it == by_type.end() || it->second.empty()) {
    throw ConfigError("template needs an entity of type " + std::string(type) +
                      " but the gazetteer has none");
  }
  return it->second;
}

template <typename T>
const T& Pick(const std::vector<T>& items, Rng& rng) {
  return items[rng.Below(items.size())];
}

std::string Fill(std::string_view text, std::string_view value) {
  const size_t at = text.find("{}");
  return std::string(text.substr(0, at)) + std::string(value) +
         std::string(text.substr(at + 2));
}

struct Draft {
  std::string text;
  std::set<std::string> entities;
  std::set<std::string> relations;
  std::set<std::string> classes;
  std::vector<std::string> triples;
};

std::vector<const Relation*> RelationsWhere(bool (*keep)(const Relation&)) {
  std::vector<const Relation*> out;
  for (const Relation& r : kRelations) {
    if (keep(r)) out.push_back(&r);
  }
  return out;
}

Draft DraftQuestion(Rng& rng) {
  static const auto what = RelationsWhere([](const Relation& r) { return r.ask == Ask::kWhat; });
  static const auto who = RelationsWhere([](const Relation& r) { return r.ask == Ask::kWho; });
  static const auto when = RelationsWhere([](const Relation& r) { return r.ask == Ask::kWhen; });
  static const auto how_many =
      RelationsWhere([](const Relation& r) { return r.ask == Ask::kHowMany; });
  static const auto yearly = RelationsWhere([](const Relation& r) { return r.yearly; });
  static const auto linked =
      RelationsWhere([](const Relation& r) { return !r.object_type.empty(); });
  // Template kinds and their relative frequencies.
  constexpr std::array<int, 8> kWeights = {24, 16, 10, 8, 7, 10, 20, 5};
  int draw = static_cast<int>(rng.Below(100));
  size_t kind = 0;
  while (draw >= kWeights[kind]) draw -= kWeights[kind++];

  Draft d;
  auto simple = [&](const Relation& r, const Entity& e) {
    d.entities.insert(e.iri);
    d.relations.insert(ExpandIri(r.iri));
    d.triples.push_back("<" + e.iri + "> " + std::string(r.iri) + " ?x");
  };
  switch (kind) {
    case 0: {
      const Relation& r = *Pick(what, rng);
      const Entity& e = Pick(EntitiesOf(r.subject_type), rng);
      d.text = fmt::format("What is the {} of {}?", r.phrase, e.surface);
      simple(r, e);
      break;
    }
    case 1: {
      const Relation& r = *Pick(who, rng);
      const Entity& e = Pick(EntitiesOf(r.subject_type), rng);
      d.text = rng.Bernoulli(0.5) ? fmt::format("Who {} {}?", r.verb, e.surface)
                                  : fmt::format("Who is the {} of {}?", r.phrase, e.surface);
      simple(r, e);
      break;
    }
    case 2: {
      const Relation& r = *Pick(when, rng);
      const Entity& e = Pick(EntitiesOf(r.subject_type), rng);
      d.text = fmt::format("When was {} {}?", e.surface, r.verb);
      simple(r, e);
      break;
    }
    case 3: {
      const Relation& r = *Pick(how_many, rng);
      const Entity& e = Pick(EntitiesOf(r.subject_type), rng);
      d.text = fmt::format("How many {} does {} have?", r.phrase, e.surface);
      simple(r, e);
      break;
    }
    case 4: {
      const Relation& r = *Pick(yearly, rng);
      const Entity& e = Pick(EntitiesOf(r.subject_type), rng);
      d.text = fmt::format("What was the {} of {} in {}?", r.phrase, e.surface,
                           1950 + rng.Below(70));
      simple(r, e);
      break;
    }
    case 5: {
      const Relation& r = *Pick(linked, rng);
      const Entity& e = Pick(EntitiesOf(r.subject_type), rng);
      const Entity& o = Pick(EntitiesOf(r.object_type), rng);
      d.text = fmt::format("Is {} the {} of {}?", o.surface, r.phrase, e.surface);
      d.entities = {e.iri, o.iri};
      d.relations.insert(ExpandIri(r.iri));
      d.triples.push_back("<" + e.iri + "> " + std::string(r.iri) + " <" + o.iri + ">");
      break;
    }
    case 6: {
      const ClassTemplate& t =
          kClassTemplates[rng.Below(std::size(kClassTemplates))];
      const Entity& e = Pick(EntitiesOf(t.slot_type), rng);
      d.text = Fill(t.text, e.surface);
      d.entities.insert(e.iri);
      d.relations.insert(ExpandIri(t.relation_iri));
      d.classes.insert(ExpandIri(t.class_iri));
      d.triples.push_back("?x rdf:type " + std::string(t.class_iri));
      d.triples.push_back(t.entity_is_subject
                              ? "<" + e.iri + "> " + std::string(t.relation_iri) + " ?x"
                              : "?x " + std::string(t.relation_iri) + " <" + e.iri + ">");
      break;
    }
    default: {
      const Entity& e = Pick(Entities(), rng);
      const auto& [word, iri] = kClassWords[rng.Below(std::size(kClassWords))];
      d.text = fmt::format("Is {} a {}?", e.surface, word);
      d.entities.insert(e.iri);
      d.relations.insert(ExpandIri("rdf:type"));
      d.classes.insert(ExpandIri(iri));
      d.triples.push_back("<" + e.iri + "> rdf:type " + std::string(iri));
      break;
    }
  }
  return d;
}

std::vector<double> WordVector(std::string_view token, size_t dim, uint64_t seed) {
  Rng rng(DeriveSeed(DeriveSeed(seed, "embeddings"), Fnv1a64(token)));
  std::vector<double> v(dim);
  for (double& x : v) x = std::round(rng.Normal() * 1e6) / 1e6;
  return v;
}

void AddWords(std::string_view text, std::set<std::string>* words) {
  for (const auto& t : features::Tokenize(text)) {
    if (!features::IsPunctuation(t)) words->insert(features::ToLower(t));
  }
}

// Profile for one simulated component.
SimProfile Profile(std::vector<SimRule> rules, double base_rate, NoiseMode base_noise,
                   uint64_t seed, const std::map<std::string, std::string>& lexicon) {
  SimProfile p;
  p.rules = std::move(rules);
  p.base_rate = base_rate;
  p.base_noise = base_noise;
  p.seed = seed;
  p.lexicon = lexicon;
  return p;
}

Component Simulated(std::string id, std::string name, QATask task, SimProfile profile) {
  return Component{std::move(id), std::move(name), task, std::move(profile)};
}

std::string TwoDigits(size_t i) { return fmt::format("{:02d}", i); }

std::vector<Component> BaselineComponents(uint64_t seed) {
  // Surface properties the simulated NED services are good (first rule) or
  // bad (second rule) at.
  const std::vector<Condition> ned_pool = {
      {"case_all_caps", CompareOp::kGreaterEqual, 1},
      {"case_longest_capitalized_run", CompareOp::kGreaterEqual, 2},
      {"case_digit_tokens", CompareOp::kGreaterEqual, 1},
      {"qtype_who", CompareOp::kEqual, 1},
      {"case_mixed", CompareOp::kGreaterEqual, 1},
      {"gold_items", CompareOp::kGreaterEqual, 2},
      {"qtype_how", CompareOp::kEqual, 1},
      {"atype_boolean", CompareOp::kEqual, 1},
      {"ent_PERSON", CompareOp::kGreaterEqual, 1},
      {"ent_CITY", CompareOp::kGreaterEqual, 1},
      {"n_words", CompareOp::kGreaterEqual, 9},
      {"pos_NNS", CompareOp::kGreaterEqual, 1},
      {"qtype_which", CompareOp::kEqual, 1},
      {"ent_COUNTRY", CompareOp::kGreaterEqual, 1},
      {"pos_VBD", CompareOp::kGreaterEqual, 1},
      {"qtype_give_list", CompareOp::kEqual, 1},
      {"pos_JJ", CompareOp::kGreaterEqual, 1},
      {"n_words", CompareOp::kLessEqual, 5},
  };
  constexpr std::array<NoiseMode, 3> kNoise = {NoiseMode::kEmpty, NoiseMode::kPartial,
                                               NoiseMode::kSpurious};
  // Question shapes every baseline service misses, so failures are
  // correlated and a share of each task stays unanswerable (about 40% of
  // NED and 70% of RL questions on the synthetic corpus).
  const std::vector<SimRule> ned_hard = {
      {{{"qtype_what", CompareOp::kEqual, 1}, {"pos_IN", CompareOp::kEqual, 1}},
       0.0,
       NoiseMode::kEmpty},
      {{{"n_words", CompareOp::kGreaterEqual, 7},
        {"case_noninitial_capitalized", CompareOp::kEqual, 2}},
       0.0,
       NoiseMode::kEmpty},
  };
  const std::vector<SimRule> rl_hard = {
      {{{"pos_NN", CompareOp::kEqual, 1}, {"pos_NNP", CompareOp::kGreaterEqual, 2}},
       0.0,
       NoiseMode::kEmpty},
      {{{"pos_VBD", CompareOp::kGreaterEqual, 1}, {"pos_DT", CompareOp::kEqual, 0}},
       0.0,
       NoiseMode::kEmpty},
      {{{"pos_NNP", CompareOp::kEqual, 1}, {"pos_IN", CompareOp::kEqual, 1}},
       0.0,
       NoiseMode::kEmpty},
  };
  std::vector<Component> out;
  for (size_t i = 0; i < 18; ++i) {
    std::vector<SimRule> rules = ned_hard;
    rules.push_back({{ned_pool[i]}, 0.9 - 0.01 * static_cast<double>(i % 5), kNoise[i % 2]});
    rules.push_back({{ned_pool[(i + 7) % ned_pool.size()]}, 0.1, NoiseMode::kEmpty});
    out.push_back(Simulated("ned-" + TwoDigits(i + 1), "Simulated NED " + TwoDigits(i + 1),
                            QATask::kNED,
                            Profile(std::move(rules), 0.12 + 0.02 * static_cast<double>(i % 6),
                                    kNoise[i % 3], DeriveSeed(seed, "ned") + i,
                                    EntityLexicon())));
  }
  const std::vector<std::pair<Condition, Condition>> rl_pool = {
      {{"qtype_who", CompareOp::kEqual, 1}, {"qtype_how", CompareOp::kEqual, 1}},
      {{"pos_VBD", CompareOp::kGreaterEqual, 1}, {"n_words", CompareOp::kGreaterEqual, 9}},
      {{"n_words", CompareOp::kLessEqual, 6}, {"atype_boolean", CompareOp::kEqual, 1}},
      {{"atype_number", CompareOp::kEqual, 1}, {"qtype_who", CompareOp::kEqual, 1}},
      {{"qtype_what", CompareOp::kEqual, 1}, {"case_digit_tokens", CompareOp::kGreaterEqual, 1}},
  };
  for (size_t i = 0; i < rl_pool.size(); ++i) {
    std::vector<SimRule> rules = rl_hard;
    rules.push_back({{rl_pool[i].first}, 0.75, NoiseMode::kEmpty});
    rules.push_back({{rl_pool[i].second}, 0.05, NoiseMode::kEmpty});
    out.push_back(Simulated("rl-" + TwoDigits(i + 1), "Simulated RL " + TwoDigits(i + 1),
                            QATask::kRL,
                            Profile(std::move(rules), 0.08 + 0.03 * static_cast<double>(i),
                                    NoiseMode::kEmpty, DeriveSeed(seed, "rl") + i,
                                    RelationLexicon())));
  }
  out.push_back(Simulated("cl-01", "Simulated CL 01", QATask::kCL,
                          Profile({{{{"pos_NNS", CompareOp::kGreaterEqual, 1}}, 0.85,
                                    NoiseMode::kEmpty}},
                                  0.35, NoiseMode::kEmpty, DeriveSeed(seed, "cl"),
                                  ClassLexicon())));
  out.push_back(Simulated("cl-02", "Simulated CL 02", QATask::kCL,
                          Profile({{{{"atype_boolean", CompareOp::kEqual, 1}}, 0.9,
                                    NoiseMode::kEmpty}},
                                  0.45, NoiseMode::kEmpty, DeriveSeed(seed, "cl") + 1,
                                  ClassLexicon())));
  out.push_back(Simulated("qb-01", "Simulated QB 01", QATask::kQB,
                          Profile({{{{"gold_items", CompareOp::kEqual, 1}}, 0.85,
                                    NoiseMode::kEmpty}},
                                  0.3, NoiseMode::kPartial, DeriveSeed(seed, "qb"), {})));
  out.push_back(Simulated("qb-02", "Simulated QB 02", QATask::kQB,
                          Profile({{{{"gold_items", CompareOp::kGreaterEqual, 2}}, 0.8,
                                    NoiseMode::kPartial}},
                                  0.5, NoiseMode::kEmpty, DeriveSeed(seed, "qb") + 1, {})));
  return out;
}

std::vector<Component> NewComponents(uint64_t seed) {
  struct Spec {
    const char* id;
    const char* name;
    QATask task;
    double rate;
  };
  constexpr Spec kSpecs[] = {
      {"earl-ned", "EARL-like NED", QATask::kNED, 0.54},
      {"falcon-ned", "Falcon-like NED", QATask::kNED, 0.73},
      {"ambiverse-ned", "Ambiverse-like NED", QATask::kNED, 0.65},
      {"earl-rl", "EARL-like RL", QATask::kRL, 0.27},
      {"falcon-rl", "Falcon-like RL", QATask::kRL, 0.56},
  };
  std::vector<Component> out;
  for (const Spec& s : kSpecs) {
    out.push_back(Simulated(s.id, s.name, s.task,
                            Profile({}, s.rate, NoiseMode::kEmpty, DeriveSeed(seed, s.id),
                                    s.task == QATask::kNED ? EntityLexicon()
                                                           : RelationLexicon())));
  }
  return out;
}

std::vector<Component> PlantedNed(uint64_t seed) {
  const std::pair<const char*, Condition> kPlanted[] = {
      {"ned-caps", {"case_all_caps", CompareOp::kGreaterEqual, 1}},
      {"ned-run", {"case_longest_capitalized_run", CompareOp::kGreaterEqual, 2}},
      {"ned-digits", {"case_digit_tokens", CompareOp::kGreaterEqual, 1}},
      {"ned-who", {"qtype_who", CompareOp::kEqual, 1}},
      {"ned-mixed", {"case_mixed", CompareOp::kGreaterEqual, 1}},
  };
  std::vector<Component> out;
  for (const auto& [id, condition] : kPlanted) {
    out.push_back(Simulated(id, id, QATask::kNED,
                            Profile({{{condition}, 1.0, NoiseMode::kEmpty}}, 0.0,
                                    NoiseMode::kEmpty, DeriveSeed(seed, id), EntityLexicon())));
  }
  out.push_back(Simulated("ned-noise", "ned-noise", QATask::kNED,
                          Profile({}, 0.3, NoiseMode::kEmpty, DeriveSeed(seed, "ned-noise"),
                                  EntityLexicon())));
  return out;
}

}  // namespace

const std::map<std::string, std::string>& EntityLexicon() {
  static const std::map<std::string, std::string> lexicon = [] {
    std::map<std::string, std::string> m;
    for (const Entity& e : Entities()) {
      std::string phrase;
      for (const auto& t : features::Tokenize(e.surface)) {
        phrase += (phrase.empty() ? "" : " ") + features::ToLower(t);
      }
      m.emplace(phrase, e.iri);
    }
    return m;
  }();
  return lexicon;
}

const std::map<std::string, std::string>& RelationLexicon() {
  static const std::map<std::string, std::string> lexicon = [] {
    std::map<std::string, std::string> m;
    for (const Relation& r : kRelations) m.emplace(std::string(r.phrase), ExpandIri(r.iri));
    for (const Relation& r : kRelations) {
      if (!r.verb.empty()) m.emplace(std::string(r.verb), ExpandIri(r.iri));
    }
    return m;
  }();
  return lexicon;
}

const std::map<std::string, std::string>& ClassLexicon() {
  static const std::map<std::string, std::string> lexicon = [] {
    std::map<std::string, std::string> m;
    for (const auto& [word, iri] : kClassWords) {
      m.emplace(std::string(word), ExpandIri(iri));
    }
    m.emplace("rivers", ExpandIri("dbo:River"));
    m.emplace("films", ExpandIri("dbo:Film"));
    m.emplace("books", ExpandIri("dbo:Book"));
    m.emplace("companies", ExpandIri("dbo:Company"));
    m.emplace("mountains", ExpandIri("dbo:Mountain"));
    m.emplace("universities", ExpandIri("dbo:University"));
    return m;
  }();
  return lexicon;
}

std::string_view ComponentPresetName(ComponentPreset preset) {
  switch (preset) {
    case ComponentPreset::kBaseline:
      return "baseline";
    case ComponentPreset::kNewComponents:
      return "new-components";
    case ComponentPreset::kPlantedNed:
      return "planted-ned";
  }
  return "?";
}

ComponentPreset ComponentPresetFromName(std::string_view name) {
  for (auto p : {ComponentPreset::kBaseline, ComponentPreset::kNewComponents,
                 ComponentPreset::kPlantedNed}) {
    if (ComponentPresetName(p) == name) return p;
  }
  throw ParseError("unknown component preset '" + std::string(name) +
                   "' (valid: baseline, new-components, planted-ned)");
}

std::vector<Component> PresetComponents(ComponentPreset preset, uint64_t seed) {
  switch (preset) {
    case ComponentPreset::kBaseline:
      return BaselineComponents(seed);
    case ComponentPreset::kNewComponents:
      return NewComponents(seed);
    case ComponentPreset::kPlantedNed:
      return PlantedNed(seed);
  }
  return {};
}

features::EmbeddingTable SyntheticCorpus::Table() const {
  features::EmbeddingTable table(embeddings.empty() ? 0 : embeddings.front().second.size());
  for (const auto& [token, v] : embeddings) table.Add(token, v);
  return table;
}

SyntheticCorpus GenerateSynthetic(const SyntheticSpec& spec) {
  if (spec.n_questions == 0) throw RangeError("synthetic corpus needs at least one question");
  SyntheticCorpus corpus{{}, components::Registry(spec.scenario), {}};
  Rng rng(DeriveSeed(spec.seed, "synthetic-questions"));
  const size_t width = std::max<size_t>(4, std::to_string(spec.n_questions).size());
  std::set<std::string> words;
  for (size_t i = 0; i < spec.n_questions; ++i) {
    Draft d = DraftQuestion(rng);
    Question q;
    q.id = fmt::format("q{:0{}}", i + 1, width);
    q.text = d.text;
    q.gold[QATask::kNED] = GoldAnnotation{QATask::kNED, d.entities, {}};
    q.gold[QATask::kRL] = GoldAnnotation{QATask::kRL, d.relations, {}};
    if (!d.classes.empty()) q.gold[QATask::kCL] = GoldAnnotation{QATask::kCL, d.classes, {}};
    q.gold[QATask::kQB] = GoldAnnotation{QATask::kQB, {}, CanonicalTripleSet(d.triples)};
    AddWords(q.text, &words);
    corpus.questions.push_back(std::move(q));
  }
  for (const Component& c : spec.components) corpus.registry.Register(c);
  if (spec.embedding_dim > 0) {
    for (const auto* lexicon : {&EntityLexicon(), &RelationLexicon(), &ClassLexicon()}) {
      for (const auto& [phrase, iri] : *lexicon) AddWords(phrase, &words);
    }
    for (const auto& w : words) {
      corpus.embeddings.emplace_back(w, WordVector(w, spec.embedding_dim, spec.seed));
    }
  }
  return corpus;
}

void WriteEmbeddings(std::ostream& out, const EmbeddingRows& rows) {
  const size_t dim = rows.empty() ? 0 : rows.front().second.size();
  out << rows.size() << ' ' << dim << '\n';
  for (const auto& [token, v] : rows) {
    out << token;
    for (double x : v) out << ' ' << fmt::format("{:.6f}", x);
    out << '\n';
  }
}

void SaveEmbeddings(const std::filesystem::path& path, const EmbeddingRows& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  WriteEmbeddings(out, rows);
}

}  // namespace pipeforge::bench
