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


// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
// and exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "pipeforge/bench/experiment.h"
#include "pipeforge/bench/runner.h"
#include "pipeforge/bench/synthetic.h"
#include "pipeforge/components/adapters.h"
#include "pipeforge/components/registry.h"
#include "pipeforge/components/scoring.h"
#include "pipeforge/core/csv.h"
#include "pipeforge/core/logging.h"
#include "pipeforge/core/rng.h"
#include "pipeforge/features/extractor.h"
#include "pipeforge/learners/gini.h"
#include "pipeforge/learners/kfold.h"
#include "pipeforge/learners/logistic.h"
#include "pipeforge/learners/predictor.h"
#include "pipeforge/optimiser/compose.h"
#include "pipeforge/selection/ranking.h"

namespace fs = std::filesystem;
using namespace pipeforge;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failed checks; the first few are kept for the report.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_.push_back(what);
  }
  Outcome Result(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    std::string detail = fmt::format("{} failed check(s): ", failures_);
    for (size_t i = 0; i < messages_.size(); ++i) detail += (i ? "; " : "") + messages_[i];
    return {false, detail};
  }

 private:
  size_t failures_ = 0;
  std::vector<std::string> messages_;
};

std::shared_ptr<const features::FeatureExtractor> Extractor() {
  static const auto extractor =
      std::make_shared<const features::FeatureExtractor>(features::FeatureExtractor::Default());
  return extractor;
}

// ---- 1 --------------------------------------------------------------------

Outcome WorkedExample() {
  Question q{"q1", "What is the timezone of India?", {}, std::nullopt};
  features::FeatureConfig config;
  config.variant = features::FeatureSet::kCF1;
  const auto v = Extractor()->Extract(q, config);
  const std::map<std::string, double> expected = {
      {"qtype_what", 1}, {"atype_string", 1}, {"n_words", 6}, {"pos_DT", 1}, {"pos_IN", 1},
      {"pos_WP", 1},     {"pos_VBZ", 1},      {"pos_NNP", 1}, {"pos_NN", 1}};
  Checker c;
  c.Expect(v.size() == 28, fmt::format("{} dims", v.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    auto it = expected.find(v.names[i]);
    const double want = it == expected.end() ? 0.0 : it->second;
    c.Expect(v.values[i] == want, fmt::format("{}={} (want {})", v.names[i], v.values[i], want));
  }
  for (const auto& [name, value] : expected) {
    c.Expect(std::find(v.names.begin(), v.names.end(), name) != v.names.end(),
             "missing " + name);
  }
  return c.Result("9 non-zero dims match, 19 zero dims");
}

// ---- 2 --------------------------------------------------------------------

Outcome Dimensionality() {
  Question q{"q1", "Who directed the film Titanic in 1997?", {}, std::nullopt};
  Checker c;
  std::string summary;
  for (QATask task : {QATask::kNED, QATask::kRL, QATask::kCL, QATask::kQB}) {
    for (auto [set, want] : {std::pair{features::FeatureSet::kCF1, size_t{28}},
                             std::pair{features::FeatureSet::kCF2,
                                       task == QATask::kNED ? size_t{34} : size_t{51}}}) {
      features::FeatureConfig config;
      config.variant = set;
      config.for_task = task;
      const size_t got = Extractor()->Extract(q, config).size();
      c.Expect(got == want, fmt::format("{} {}: {} dims (want {})",
                                        features::FeatureSetName(set), TaskName(task), got, want));
      c.Expect(features::FeatureDimension(set, task, 0, 30) == want, "FeatureDimension");
    }
  }
  return c.Result("CF1=28, CF2=51 (NED 34)");
}

// ---- 3 --------------------------------------------------------------------

// Ranks components by a hash of (question, component): arbitrary but
// fixed, independent of the training fold.
class HashRanker : public bench::FoldRanker {
 public:
  explicit HashRanker(std::vector<std::string> ids) : ids_(std::move(ids)) {}
  void Fit(const bench::FoldData&) override {}
  std::vector<std::string> Rank(const Question& q, QATask) const override {
    return Order(q.id, ids_);
  }
  static std::vector<std::string> Order(const std::string& qid, std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end(), [&](const auto& a, const auto& b) {
      return Fnv1a64(qid + "/" + a) < Fnv1a64(qid + "/" + b);
    });
    return ids;
  }

 private:
  std::vector<std::string> ids_;
};

Outcome MetricOracle() {
  Checker c;
  const std::vector<double> grid = {0.0, 0.25, 0.5, 0.5000001, 0.667, 1.0};
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng(DeriveSeed(1234, static_cast<uint64_t>(trial)));
    components::Registry registry("toy");
    std::vector<std::string> cids;
    for (int j = 0; j < 5; ++j) {
      Component comp;
      comp.id = fmt::format("c{}", j);
      comp.task = QATask::kNED;
      comp.adapter = SimProfile{};
      registry.Register(comp);
      cids.push_back(comp.id);
    }
    std::vector<Question> questions;
    PerformanceMatrix matrix;
    std::map<std::string, std::map<std::string, double>> f;
    for (int i = 0; i < 20; ++i) {
      Question q;
      q.id = fmt::format("q{:02}", i);
      q.text = "Where is Berlin?";
      q.gold[QATask::kNED] = GoldAnnotation{QATask::kNED, {"http://example.org/x"}, {}};
      questions.push_back(q);
      for (const auto& cid : cids) {
        const double v = rng.Bernoulli(0.5) ? grid[rng.Below(grid.size())] : rng.Uniform();
        matrix.Set(q.id, cid, v);
        f[q.id][cid] = v;
      }
    }
    const auto result = bench::Evaluate(
        questions, matrix, registry, [&] { return std::make_unique<HashRanker>(cids); }, 5,
        DeriveSeed(99, static_cast<uint64_t>(trial)));

    // Brute-force recount over all questions; the ranker ignores folds, so
    // fold sums must equal the whole-corpus count.
    size_t answerable = 0;
    std::array<size_t, 3> top{};
    for (const auto& q : questions) {
      bool any = false;
      for (const auto& cid : cids) any = any || f[q.id][cid] > 0.5;
      if (!any) continue;
      ++answerable;
      const auto order = HashRanker::Order(q.id, cids);
      for (size_t n = 1; n <= 3; ++n) {
        bool hit = false;
        for (size_t r = 0; r < n; ++r) hit = hit || f[q.id][order[r]] > 0.5;
        top[n - 1] += hit;
      }
    }
    size_t got_answerable = 0;
    std::array<size_t, 3> got_top{};
    for (const auto& fold : result.folds) {
      const size_t a = fold.answerable.at(QATask::kNED);
      const auto& t = fold.top.at(QATask::kNED);
      c.Expect(t[0] <= t[1] && t[1] <= t[2] && t[2] <= a,
               fmt::format("trial {} fold {} not monotone", trial, fold.fold));
      got_answerable += a;
      for (size_t n = 0; n < 3; ++n) got_top[n] += t[n];
    }
    c.Expect(got_answerable == answerable,
             fmt::format("trial {} answerable {} vs {}", trial, got_answerable, answerable));
    c.Expect(got_top == top, fmt::format("trial {} top-n mismatch", trial));
  }
  return c.Result("50/50 matrices agree with brute force; monotone in every fold");
}

// ---- 4 --------------------------------------------------------------------

Outcome GiniOracle() {
  std::ifstream in(fs::path(PIPEFORGE_TEST_DATA_DIR) / "gini_fixture.csv");
  std::vector<std::string> row;
  csv::ReadRow(in, &row);
  learners::TrainingSet set;
  set.feature_names = {row[0], row[1], row[2]};
  while (csv::ReadRow(in, &row)) {
    if (row.size() != 4) continue;
    const std::vector<double> x = {std::stod(row[0]), std::stod(row[1]), std::stod(row[2])};
    set.x.AppendRow(x);
    set.y.push_back(std::stod(row[3]));
  }
  // Hand accounting (Gini 2p(1-p), sample-weighted):
  //   root, 8 rows, 4 positive: 8 * 0.5 = 4
  //   x0 <= 3 -> left 3 negatives (0), right 4/5 positive: 5 * 0.32 = 1.6
  //   decrease 4 - 1.6 = 2.4
  //   right node: x2 isolates the one negative, decrease 1.6 - 0 = 1.6
  //   raw importance (divided by 8): x0 0.3, x1 0, x2 0.2 -> 0.6, 0, 0.4
  const std::map<std::string, double> want = {{"x0", 0.6}, {"x1", 0.0}, {"x2", 0.4}};
  Checker c;
  c.Expect(set.size() == 8, fmt::format("fixture has {} rows", set.size()));
  const auto model = learners::Train(learners::ModelKind::kDecisionTree, set,
                                     {{"binarize", 1}, {"min_samples_leaf", 1}}, 7);
  const auto imp = learners::GiniImportance(model);
  double sum = 0.0;
  for (const auto& [name, value] : imp) {
    sum += value;
    c.Expect(std::abs(value - want.at(name)) <= 1e-9,
             fmt::format("{}: {} vs {}", name, value, want.at(name)));
  }
  c.Expect(std::abs(sum - 1.0) <= 1e-9, fmt::format("sum {}", sum));
  const auto raw = learners::TreeImpurityDecrease(model.ensemble()->trees.front(), 3);
  c.Expect(std::abs(raw[0] - 0.3) <= 1e-9 && std::abs(raw[1]) <= 1e-9 &&
               std::abs(raw[2] - 0.2) <= 1e-9,
           fmt::format("raw decrease {} {} {}", raw[0], raw[1], raw[2]));
  return c.Result(fmt::format("x0={:.12f} x1={:.12f} x2={:.12f}", imp.at("x0"), imp.at("x1"),
                              imp.at("x2")));
}

// ---- 5 --------------------------------------------------------------------

const std::set<std::string> kInformative = {"f03", "f07", "f11"};

learners::TrainingSet PlantedSet(uint64_t seed) {
  Rng rng(seed);
  learners::TrainingSet set;
  for (int j = 0; j < 13; ++j) set.feature_names.push_back(fmt::format("f{:02}", j));
  for (int i = 0; i < 200; ++i) {
    std::vector<double> x(13);
    for (double& v : x) v = rng.Uniform();
    const double signal = (x[3] + x[7] + x[11]) / 3.0 + 0.05 * rng.Normal();
    set.x.AppendRow(x);
    set.y.push_back(std::clamp(signal, 0.0, 1.0));
  }
  return set;
}

bool ContainsInformative(const std::vector<std::string>& names) {
  return std::all_of(kInformative.begin(), kInformative.end(), [&](const std::string& f) {
    return std::find(names.begin(), names.end(), f) != names.end();
  });
}

Outcome SelectionRecovery() {
  int ert_hits = 0;
  int rfe_hits = 0;
  for (int run = 0; run < 100; ++run) {
    const auto set = PlantedSet(DeriveSeed(5150, static_cast<uint64_t>(run)));
    const auto ert = selection::RankErt(set, {}, static_cast<uint64_t>(run));
    ert_hits += ContainsInformative(selection::SelectTopN(ert, 5));
    const auto rfe = selection::Rfe(set, learners::ModelKind::kRandomForest, 5,
                                    static_cast<uint64_t>(run), {{"n_trees", 30}});
    rfe_hits += ContainsInformative(selection::SelectTopN(rfe, 5));
  }
  return {ert_hits >= 95 && rfe_hits >= 95,
          fmt::format("ERT {}/100, RFE(RF, 30 trees) {}/100", ert_hits, rfe_hits)};
}

// ---- 6 and 7 --------------------------------------------------------------

struct PlantedCorpus {
  std::vector<Question> questions;
  components::Registry registry{"planted-ned"};
  PerformanceMatrix matrix;
};

const PlantedCorpus& Planted() {
  static const PlantedCorpus corpus = [] {
    PlantedCorpus c;
    bench::SyntheticSpec spec;
    spec.n_questions = 1000;
    spec.seed = 42;
    spec.embedding_dim = 0;
    c.questions = bench::GenerateSynthetic(spec).questions;
    for (auto& comp : bench::PresetComponents(bench::ComponentPreset::kPlantedNed, 42)) {
      c.registry.Register(comp);
    }
    c.matrix = components::BuildMatrix(c.registry, c.questions, 42, 1);
    return c;
  }();
  return corpus;
}

bench::ExperimentSetting PlantedSetting(bool select) {
  bench::ExperimentSetting s;
  s.name = select ? "rf-cf2-top15" : "rf-cf2";
  s.registry = "planted-ned";
  bench::TaskSetting t;
  t.features = features::FeatureSet::kCF2;
  t.model = learners::ModelKind::kRandomForest;
  if (select) {
    t.selection = selection::RankingMethod::kErt;
    t.top_n = 15;
  }
  s.tasks[QATask::kNED] = t;
  return s;
}

const bench::EvaluationResult& PlantedEvaluation(bool select) {
  static std::map<bool, bench::EvaluationResult> cache;
  auto it = cache.find(select);
  if (it == cache.end()) {
    const auto& c = Planted();
    it = cache.emplace(select, bench::EvaluateSetting(PlantedSetting(select), c.questions,
                                                      c.matrix, c.registry, Extractor(), 1))
             .first;
  }
  return it->second;
}

Outcome SelectorQuality() {
  const auto& c = Planted();
  const auto& result = PlantedEvaluation(false);
  const auto ids = c.registry.IdsFor(QATask::kNED);
  std::vector<std::string> qids;
  for (const auto& q : c.questions) qids.push_back(q.id);
  const auto plan = learners::Kfold(qids, 10, 42);

  // Expected top-1 of a uniform random pick: for each answerable question,
  // the fraction of components with F > 0.5.
  std::vector<double> random_top1(10, 0.0);
  for (const auto& q : c.questions) {
    if (q.GoldFor(QATask::kNED) == nullptr) continue;
    size_t good = 0;
    for (const auto& id : ids) good += c.matrix.Find(q.id, id).value_or(0.0) > 0.5;
    random_top1[plan.assignments.at(q.id)] += static_cast<double>(good) / ids.size();
  }
  Checker check;
  check.Expect(ids.size() == 6, fmt::format("{} NED components", ids.size()));
  double worst_ratio = 1.0;
  double worst_margin = 1.0;
  for (const auto& fold : result.folds) {
    const double a = static_cast<double>(fold.answerable.at(QATask::kNED));
    const double top1 = static_cast<double>(fold.top.at(QATask::kNED)[0]);
    const double ratio = a > 0 ? top1 / a : 1.0;
    const double margin = a > 0 ? (top1 - random_top1[fold.fold]) / a : 1.0;
    worst_ratio = std::min(worst_ratio, ratio);
    worst_margin = std::min(worst_margin, margin);
    check.Expect(ratio >= 0.95, fmt::format("fold {} top1/answerable {:.3f}", fold.fold, ratio));
    check.Expect(margin >= 0.20,
                 fmt::format("fold {} margin over random {:.3f}", fold.fold, margin));
  }
  return check.Result(fmt::format("min top1/answerable {:.3f}, min margin over random {:.3f}",
                                  worst_ratio, worst_margin));
}

Outcome SelectionEfficiency() {
  const auto& full = PlantedEvaluation(false);
  const auto& selected = PlantedEvaluation(true);
  const auto& fa = full.aggregate.tasks.at(QATask::kNED);
  const auto& sa = selected.aggregate.tasks.at(QATask::kNED);
  Checker c;
  c.Expect(sa.top[0] >= 0.98 * fa.top[0],
           fmt::format("top1 {:.1f} vs full {:.1f}", sa.top[0], fa.top[0]));
  c.Expect(selected.aggregate.train_score_ms < full.aggregate.train_score_ms,
           fmt::format("time {:.1f} ms vs full {:.1f} ms", selected.aggregate.train_score_ms,
                       full.aggregate.train_score_ms));
  c.Expect(std::abs(sa.selected_features - 15.0) < 1e-9,
           fmt::format("{} selected", sa.selected_features));
  c.Expect(std::abs(fa.selected_features - 34.0) < 1e-9,
           fmt::format("{} full", fa.selected_features));
  return c.Result(fmt::format(
      "top1 {:.1f} vs {:.1f} ({:+.2f}%), mean fold time {:.0f} ms vs {:.0f} ms, "
      "features {:.0f}/{:.0f}",
      sa.top[0], fa.top[0], 100.0 * (sa.top[0] - fa.top[0]) / fa.top[0],
      selected.aggregate.train_score_ms, full.aggregate.train_score_ms, sa.selected_features,
      fa.selected_features));
}

// ---- 8 --------------------------------------------------------------------

Outcome NewComponents() {
  Checker c;
  std::string calibration;
  // Calibration over 10,000 independent draws.
  {
    bench::SyntheticSpec spec;
    spec.n_questions = 10000;
    spec.seed = 8;
    spec.embedding_dim = 0;
    const auto questions = bench::GenerateSynthetic(spec).questions;
    const std::map<std::string, double> target = {{"earl-ned", 0.54},  {"falcon-ned", 0.73},
                                                  {"ambiverse-ned", 0.65}, {"earl-rl", 0.27},
                                                  {"falcon-rl", 0.56}};
    for (const auto& comp : bench::PresetComponents(bench::ComponentPreset::kNewComponents, 8)) {
      const auto& profile = std::get<SimProfile>(comp.adapter);
      double sum = 0.0;
      size_t n = 0;
      for (const auto& q : questions) {
        const GoldAnnotation* gold = q.GoldFor(comp.task);
        if (gold == nullptr) continue;
        const auto out = components::InvokeSimulated(comp, profile, q, 8);
        sum += components::MicroFScore(out, *gold);
        ++n;
      }
      const double mean = sum / static_cast<double>(n);
      c.Expect(target.count(comp.id) && std::abs(mean - target.at(comp.id)) <= 0.03,
               fmt::format("{} mean {:.3f}", comp.id, mean));
      calibration += fmt::format("{}{}={:.3f}", calibration.empty() ? "" : " ", comp.id, mean);
    }
  }

  bench::SyntheticSpec spec;
  spec.n_questions = 1000;
  spec.seed = 42;
  spec.embedding_dim = 0;
  const auto questions = bench::GenerateSynthetic(spec).questions;
  components::Registry baseline("baseline");
  for (auto& comp : bench::PresetComponents(bench::ComponentPreset::kBaseline, 42)) {
    baseline.Register(comp);
  }
  components::Registry extra("new");
  for (auto& comp : bench::PresetComponents(bench::ComponentPreset::kNewComponents, 42)) {
    extra.Register(comp);
  }
  const auto all = components::Merge(baseline, extra, "all");
  const auto matrix = components::BuildMatrix(all, questions, 42, 1);
  const auto base_reg = bench::ScenarioRegistry(bench::kBaselineScenario, baseline, &extra, matrix);
  const auto plus_reg = bench::ScenarioRegistry(bench::kPlusNewScenario, baseline, &extra, matrix);
  const auto base = bench::EvaluateSetting(bench::NamedSetting("Baseline"), questions, matrix,
                                           base_reg, Extractor(), 1);
  const auto plus = bench::EvaluateSetting(bench::NamedSetting("NC"), questions, matrix,
                                           plus_reg, Extractor(), 1);
  for (QATask task : {QATask::kNED, QATask::kRL}) {
    for (size_t f = 0; f < base.folds.size(); ++f) {
      const size_t b = base.folds[f].answerable.at(task);
      const size_t p = plus.folds[f].answerable.at(task);
      c.Expect(p > b, fmt::format("{} fold {}: {} -> {}", TaskName(task), f, b, p));
    }
  }
  return c.Result(fmt::format(
      "{}; mean answerable NED {:.1f} -> {:.1f}, RL {:.1f} -> {:.1f}", calibration,
      base.aggregate.tasks.at(QATask::kNED).answerable,
      plus.aggregate.tasks.at(QATask::kNED).answerable,
      base.aggregate.tasks.at(QATask::kRL).answerable,
      plus.aggregate.tasks.at(QATask::kRL).answerable));
}

// ---- 9 --------------------------------------------------------------------

Outcome GradientCheck() {
  Checker c;
  double worst = 0.0;
  for (int inst = 0; inst < 20; ++inst) {
    Rng rng(DeriveSeed(909, static_cast<uint64_t>(inst)));
    const size_t n = 10 + rng.Below(30);
    const size_t d = 2 + rng.Below(8);
    learners::DenseMatrix x(n, d);
    std::vector<double> y(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < d; ++j) x.at(i, j) = rng.Normal();
      y[i] = rng.Bernoulli(0.5) ? 1.0 : 0.0;
    }
    std::vector<double> w(d);
    for (double& v : w) v = rng.Normal();
    const double b = rng.Normal();
    const double l2 = rng.Uniform(0.0, 0.1);
    std::vector<double> gw(d);
    double gb = 0.0;
    learners::LogisticGradient(x, y, w, b, l2, gw, &gb);

    const double h = 1e-5;
    auto rel = [](double analytic, double numeric) {
      return std::abs(analytic - numeric) / std::max({std::abs(analytic), std::abs(numeric), 1e-8});
    };
    for (size_t j = 0; j <= d; ++j) {
      std::vector<double> wp = w, wm = w;
      double bp = b, bm = b;
      if (j < d) {
        wp[j] += h;
        wm[j] -= h;
      } else {
        bp += h;
        bm -= h;
      }
      const double numeric =
          (learners::LogisticLoss(x, y, wp, bp, l2) - learners::LogisticLoss(x, y, wm, bm, l2)) /
          (2 * h);
      const double e = rel(j < d ? gw[j] : gb, numeric);
      worst = std::max(worst, e);
      c.Expect(e <= 1e-4, fmt::format("instance {} coord {} rel err {:.2e}", inst, j, e));
    }
  }
  return c.Result(fmt::format("max relative error {:.2e}", worst));
}

// ---- 10 -------------------------------------------------------------------

// Drops timing-derived fields: CSV columns ending in _ms or named
// inv_time, JSON keys ending in _ms.
std::string StripTiming(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (path.extension() == ".json") {
    nlohmann::json j = nlohmann::json::parse(in);
    std::function<void(nlohmann::json&)> strip = [&](nlohmann::json& node) {
      if (node.is_object()) {
        for (auto it = node.begin(); it != node.end();) {
          const std::string& key = it.key();
          if (key.size() > 3 && key.compare(key.size() - 3, 3, "_ms") == 0) {
            it = node.erase(it);
          } else {
            strip(*it);
            ++it;
          }
        }
      } else if (node.is_array()) {
        for (auto& e : node) strip(e);
      }
    };
    strip(j);
    return j.dump();
  }
  if (path.extension() != ".csv") {
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::vector<std::string> row;
  std::vector<bool> keep;
  std::ostringstream out;
  bool header = true;
  while (csv::ReadRow(in, &row)) {
    if (header) {
      for (const auto& name : row) {
        const bool timing = name == "inv_time" ||
                            (name.size() > 3 && name.compare(name.size() - 3, 3, "_ms") == 0);
        keep.push_back(!timing);
      }
      header = false;
    }
    std::vector<std::string> kept;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i >= keep.size() || keep[i]) kept.push_back(row[i]);
    }
    csv::WriteRow(out, kept);
  }
  return out.str();
}

std::map<std::string, std::string> Snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    files[fs::relative(entry.path(), dir).generic_string()] = StripTiming(entry.path());
  }
  return files;
}

Outcome Determinism() {
  const fs::path root = fs::temp_directory_path() / "pipeforge_acceptance_determinism";
  fs::remove_all(root);
  const nlohmann::json doc = {
      {"synthetic", {{"n_questions", 400}, {"embedding_dim", 8}}},
      {"folds", 5},
      {"seed", 7},
      {"settings", {"Baseline", "FS", "FS+NC+ML", "2.0-pruned"}}};
  const auto file = bench::ParseExperimentFile(doc, root);
  bench::RunExperiment(file, root / "a", 1);
  bench::RunExperiment(file, root / "b", 1);
  const auto a = Snapshot(root / "a");
  const auto b = Snapshot(root / "b");
  Checker c;
  c.Expect(!a.empty(), "no outputs");
  c.Expect(a.size() == b.size(), fmt::format("{} vs {} files", a.size(), b.size()));
  for (const auto& [name, content] : a) {
    auto it = b.find(name);
    c.Expect(it != b.end() && it->second == content, name + " differs");
  }
  fs::remove_all(root);
  return c.Result(fmt::format("{} output files identical", a.size()));
}

// ---- 11 -------------------------------------------------------------------

Outcome CompositionLaws() {
  using optimiser::RankedComponents;
  std::map<QATask, std::map<std::string, double>> scores = {
      {QATask::kNED, {{"ned-a", 0.4}, {"ned-b", 0.9}, {"ned-c", 0.7}}},
      {QATask::kRL, {{"rl-a", 0.6}, {"rl-b", 0.3}}},
      {QATask::kQB, {{"qb-a", 0.5}, {"qb-b", 0.8}}}};
  optimiser::Goal goal = optimiser::Goal::Parse("NED,RL,QB", "NED=3,RL=2,QB=2");
  auto rank_all = [&](double ned_scale) {
    std::map<QATask, RankedComponents> r;
    for (const auto& [task, s] : scores) {
      std::map<std::string, double> scaled = s;
      if (task == QATask::kNED) {
        for (auto& [id, v] : scaled) v *= ned_scale;
      }
      r[task] = optimiser::RankScores(task, scaled);
    }
    return r;
  };
  const auto plans = optimiser::Compose(goal, rank_all(1.0));
  Checker c;
  c.Expect(plans.size() == 12, fmt::format("{} plans", plans.size()));
  std::set<std::string> keys;
  for (const auto& p : plans) keys.insert(p.Key());
  c.Expect(keys.size() == 12, "duplicate plans");
  const std::string argmax = "ned-b|rl-a|qb-b";
  c.Expect(plans.front().Key() == argmax, "first plan " + plans.front().Key());
  c.Expect(std::abs(plans.front().estimated_quality - 0.9 * 0.6 * 0.8) < 1e-12, "quality");
  std::vector<std::string> order;
  for (const auto& p : plans) order.push_back(p.Key());
  for (double scale : {0.5, 0.25, 1.0 / 0.9}) {
    const auto scaled = optimiser::Compose(goal, rank_all(scale));
    std::vector<std::string> scaled_order;
    for (const auto& p : scaled) scaled_order.push_back(p.Key());
    c.Expect(scaled.front().Key() == argmax, fmt::format("scale {}: first plan changed", scale));
    c.Expect(scaled_order == order, fmt::format("scale {}: plan order changed", scale));
  }
  return c.Result("12 plans, argmax first, order invariant under scaling");
}

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  InitLogging();
  const std::vector<Criterion> criteria = {
      {1, "worked-example fidelity", 1, WorkedExample},
      {2, "dimensionality law", 1, Dimensionality},
      {3, "metric oracle", 10, MetricOracle},
      {4, "gini oracle", 1, GiniOracle},
      {5, "feature-selection recovery", 60, SelectionRecovery},
      {6, "selector quality", 120, SelectorQuality},
      {7, "feature-selection efficiency", 180, SelectionEfficiency},
      {8, "new-components scenario", 120, NewComponents},
      {9, "gradient check", 5, GradientCheck},
      {10, "determinism", 120, Determinism},
      {11, "composition laws", 1, CompositionLaws},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criterion.budget_s) {
      outcome.pass = false;
      outcome.detail += fmt::format(" [over budget: {:.2f}s > {:.0f}s]", seconds, criterion.budget_s);
    }
    failed += !outcome.pass;
    std::cout << fmt::format("{} criterion {:>2} {:<30} {:7.2f}s  {}\n",
                             outcome.pass ? "PASS" : "FAIL", criterion.id, criterion.name,
                             seconds, outcome.detail)
              << std::flush;
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed,
                           criteria.size());
  return failed == 0 ? 0 : 1;
}
