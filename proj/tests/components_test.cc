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


#include <atomic>
#include <chrono>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>
#include <httplib.h>
#include <json.hpp>

#include "pipeforge/components/adapters.h"
#include "pipeforge/components/registry.h"
#include "pipeforge/components/scoring.h"
#include "pipeforge/core/errors.h"
#include "pipeforge/core/triples.h"

namespace pipeforge::components {
namespace {

const std::string kIndia = "http://dbpedia.org/resource/India";

Question IndiaQuestion() {
  Question q;
  q.id = "q1";
  q.text = "What is the timezone of India?";
  q.gold[QATask::kNED] = {QATask::kNED, {kIndia}, {}};
  q.gold[QATask::kQB] = {QATask::kQB, {}, CanonicalTripleSet({"dbr:India dbo:timeZone ?x"})};
  return q;
}

Component Sim(std::string id, QATask task, SimProfile profile) {
  return Component{std::move(id), "", task, std::move(profile)};
}

TEST(MicroFTest, SetOverlap) {
  GoldAnnotation gold{QATask::kNED, {"a", "b"}, {}};
  AnnotationSet p{QATask::kNED, {"a", "c"}, "x", 0, false};
  EXPECT_DOUBLE_EQ(MicroFScore(p, gold), 0.5);
  p.items = {" a ", "b"};
  EXPECT_DOUBLE_EQ(MicroFScore(p, gold), 1.0);
  p.items = {};
  EXPECT_DOUBLE_EQ(MicroFScore(p, gold), 0.0);
  p.items = {"a"};
  EXPECT_DOUBLE_EQ(MicroFScore(p, gold), 2.0 / 3.0);
  p.task = QATask::kRL;
  EXPECT_THROW(MicroFScore(p, gold), ValidationError);
}

TEST(RegistryTest, RegisterLookupAndCounts) {
  Registry r("demo");
  r.Register(Sim("b", QATask::kNED, {}));
  r.Register(Sim("a", QATask::kNED, {}));
  r.Register(Sim("ner", QATask::kNER, {}));
  r.Register(Sim("r", QATask::kRL, {}));
  EXPECT_EQ(r.Get("ner").task, QATask::kNED);
  EXPECT_EQ(r.IdsFor(QATask::kNED), (std::vector<std::string>{"a", "b", "ner"}));
  EXPECT_EQ(r.CountsLabel(), "NED=3 RL=1");
  EXPECT_THROW(r.Register(Sim("a", QATask::kRL, {})), ValidationError);
  EXPECT_THROW(r.Register(Sim("", QATask::kRL, {})), ValidationError);
  EXPECT_THROW(r.Get("zzz"), ConfigError);
  EXPECT_EQ(r.Find("zzz"), nullptr);
}

TEST(RegistryTest, JsonAndFileRoundTrip) {
  Registry r("demo");
  SimProfile p;
  p.base_rate = 0.4;
  p.rules.push_back({{{"qtype_who", CompareOp::kEqual, 1.0}}, 0.9, NoiseMode::kPartial});
  p.lexicon["india"] = kIndia;
  r.Register(Sim("s", QATask::kNED, p));
  r.Register(Component{"h", "remote", QATask::kRL, HttpBinding{"http://localhost:1/rl", 200, 2}});
  EXPECT_EQ(Registry::FromJson(nlohmann::json::parse(r.ToJson().dump())), r);
  const auto path = std::filesystem::temp_directory_path() / "pipeforge_registry_rt.json";
  r.Save(path);
  EXPECT_EQ(Registry::Load(path), r);
  std::filesystem::remove(path);
}

TEST(RegistryTest, MergeAndPrune) {
  Registry a("a"), b("b");
  a.Register(Sim("n1", QATask::kNED, {}));
  a.Register(Sim("n2", QATask::kNED, {}));
  b.Register(Sim("n3", QATask::kNED, {}));
  b.Register(Sim("r1", QATask::kRL, {}));
  const Registry m = Merge(a, b, "ab");
  EXPECT_EQ(m.size(), 4u);
  EXPECT_THROW(Merge(a, a, "aa"), ValidationError);
  PerformanceMatrix pm;
  pm.Set("q", "n1", 0.2);
  pm.Set("q", "n2", 0.9);
  pm.Set("q", "n3", 0.9);
  const Registry pruned = PruneByMeanF(m, pm, {{QATask::kNED, 2}}, "pruned");
  EXPECT_EQ(pruned.IdsFor(QATask::kNED), (std::vector<std::string>{"n2", "n3"}));
  EXPECT_EQ(pruned.IdsFor(QATask::kRL), (std::vector<std::string>{"r1"}));
}

TEST(SimulationTest, DeterministicAndSeedSensitive) {
  SimProfile p;
  p.base_rate = 0.5;
  const Component c = Sim("c", QATask::kNED, p);
  const Question q = IndiaQuestion();
  int differ = 0;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = InvokeSimulated(c, p, q, seed);
    const auto b = InvokeSimulated(c, p, q, seed);
    EXPECT_EQ(a.items, b.items);
    differ += a.items != InvokeSimulated(c, p, q, seed + 1000).items;
  }
  EXPECT_GT(differ, 0);
}

TEST(SimulationTest, RulesNoiseAndUnknownFeatures) {
  SimProfile p;
  p.rules.push_back({{{"qtype_what", CompareOp::kEqual, 1.0}}, 1.0, NoiseMode::kEmpty});
  const Question q = IndiaQuestion();
  EXPECT_EQ(InvokeSimulated(Sim("c", QATask::kNED, p), p, q, 1).items,
            std::set<std::string>{kIndia});
  p.rules[0].success_probability = 0.0;
  p.rules[0].noise = NoiseMode::kSpurious;
  const auto noisy = InvokeSimulated(Sim("c", QATask::kNED, p), p, q, 1);
  EXPECT_EQ(noisy.items.size(), 2u);
  EXPECT_TRUE(noisy.items.count(kIndia));
  p.rules[0].when[0].feature = "no_such_feature";
  EXPECT_THROW(InvokeSimulated(Sim("c", QATask::kNED, p), p, q, 1), ConfigError);
}

TEST(SimulationTest, LexiconFallbackWithoutGold) {
  SimProfile p;
  p.base_rate = 1.0;
  p.lexicon["india"] = "dbr:India";
  Question q = IndiaQuestion();
  q.gold.clear();
  EXPECT_EQ(SimulationTargets(p, QATask::kNED, q), std::set<std::string>{kIndia});
}

TEST(ScoringTest, BuildMatrixOnlyScoresQuestionsWithGold) {
  Registry r("t");
  SimProfile always;
  always.base_rate = 1.0;
  r.Register(Sim("ned", QATask::kNED, always));
  r.Register(Sim("rl", QATask::kRL, always));
  r.Register(Sim("qb", QATask::kQB, always));
  const auto m = BuildMatrix(r, {IndiaQuestion()}, 42, 2);
  EXPECT_EQ(m.Find("q1", "ned"), 1.0);
  EXPECT_EQ(m.Find("q1", "qb"), 1.0);
  EXPECT_FALSE(m.Find("q1", "rl").has_value());
  EXPECT_EQ(BuildMatrix(r, {IndiaQuestion()}, 42, 1), m);
}

class HttpAdapterTest : public ::testing::Test {
 protected:
  void SetUp() override {
    server_.Post("/ok", [](const httplib::Request& req, httplib::Response& res) {
      const auto body = nlohmann::json::parse(req.body);
      nlohmann::json reply = {{"items", {kIndia}}};
      if (body.at("question").get<std::string>().find("triples") != std::string::npos) {
        reply = {{"items", {"?s <http://dbpedia.org/ontology/timeZone> ?o"}}};
      }
      res.set_content(reply.dump(), "application/json");
    });
    server_.Post("/fail", [](const httplib::Request&, httplib::Response& res) {
      res.status = 503;
      res.set_content("down", "text/plain");
    });
    server_.Post("/garbage", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("{\"nope\": 1}", "application/json");
    });
    server_.Post("/slow", [](const httplib::Request&, httplib::Response& res) {
      std::this_thread::sleep_for(std::chrono::milliseconds(600));
      res.set_content("{\"items\": []}", "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  void TearDown() override {
    server_.stop();
    thread_.join();
  }
  Component At(const std::string& path, QATask task = QATask::kNED, int timeout_ms = 2000) {
    return Component{"remote", "", task,
                     HttpBinding{"http://127.0.0.1:" + std::to_string(port_) + path,
                                 timeout_ms, 0}};
  }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(HttpAdapterTest, SuccessfulCall) {
  const auto out = Invoke(At("/ok"), IndiaQuestion(), 0);
  EXPECT_FALSE(out.failed);
  EXPECT_EQ(out.items, std::set<std::string>{kIndia});
  EXPECT_EQ(out.source_component, "remote");
}

TEST_F(HttpAdapterTest, QbItemsAreCanonicalized) {
  Question q = IndiaQuestion();
  q.text = "triples please";
  const auto out = Invoke(At("/ok", QATask::kQB), q, 0);
  EXPECT_EQ(out.items,
            std::set<std::string>{"?v0 <http://dbpedia.org/ontology/timeZone> ?v1"});
}

TEST_F(HttpAdapterTest, ErrorStatusAndBadPayloadFail) {
  for (const char* path : {"/fail", "/garbage"}) {
    const auto out = Invoke(At(path), IndiaQuestion(), 0);
    EXPECT_TRUE(out.failed) << path;
    EXPECT_TRUE(out.items.empty()) << path;
  }
}

TEST_F(HttpAdapterTest, TimeoutFails) {
  const auto out = Invoke(At("/slow", QATask::kNED, 150), IndiaQuestion(), 0);
  EXPECT_TRUE(out.failed);
  EXPECT_TRUE(out.items.empty());
}

TEST(HttpAdapterStandaloneTest, UnreachableEndpointFails) {
  const Component c{"dead", "", QATask::kNED, HttpBinding{"http://127.0.0.1:9/x", 200, 1}};
  const auto out = Invoke(c, IndiaQuestion(), 0);
  EXPECT_TRUE(out.failed);
}

TEST(ScoringTest, FailedHttpComponentScoresZero) {
  Registry r("t");
  r.Register(Component{"dead", "", QATask::kNED, HttpBinding{"http://127.0.0.1:9/x", 200, 0}});
  EXPECT_EQ(BuildMatrix(r, {IndiaQuestion()}, 1, 1).Find("q1", "dead"), 0.0);
}

}  // namespace
}  // namespace pipeforge::components
