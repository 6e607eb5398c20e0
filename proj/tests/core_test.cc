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


#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "pipeforge/core/csv.h"
#include "pipeforge/core/dataset.h"
#include "pipeforge/core/errors.h"
#include "pipeforge/core/parallel.h"
#include "pipeforge/core/performance_matrix.h"
#include "pipeforge/core/rng.h"
#include "pipeforge/core/task.h"
#include "pipeforge/core/triples.h"

namespace pipeforge {
namespace {

namespace fs = std::filesystem;

TEST(TaskTest, NamesRoundTrip) {
  for (QATask t : {QATask::kNED, QATask::kRL, QATask::kCL, QATask::kQB}) {
    EXPECT_EQ(TaskFromName(TaskName(t)), t);
  }
  EXPECT_EQ(TaskFromName("NER"), QATask::kNER);
  EXPECT_FALSE(ParseTask("XYZ").has_value());
  EXPECT_THROW(TaskFromName("XYZ"), ParseError);
}

TEST(RngTest, SameSeedSameStream) {
  Rng a(17), b(17);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.Next(), b.Next());
}

TEST(RngTest, UniformAndBelowStayInRange) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(rng.Below(7), 7u);
  }
}

TEST(RngTest, DerivedSeedsDiffer) {
  std::set<uint64_t> seen;
  for (uint64_t i = 0; i < 1000; ++i) seen.insert(DeriveSeed(42, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(DeriveSeed(42, "a"), DeriveSeed(42, "b"));
  EXPECT_EQ(DeriveSeed(42, "a"), DeriveSeed(42, "a"));
}

TEST(RngTest, ShuffleIsPermutation) {
  std::vector<int> v(50);
  for (int i = 0; i < 50; ++i) v[i] = i;
  Rng rng(5);
  rng.Shuffle(std::span<int>(v));
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(ParallelTest, VisitsEveryIndexOnce) {
  std::vector<int> hits(200, 0);
  ParallelFor(hits.size(), 4, [&](size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(ParallelTest, RethrowsWorkerException) {
  EXPECT_THROW(ParallelFor(10, 3,
                           [](size_t i) {
                             if (i == 7) throw RangeError("boom");
                           }),
               RangeError);
}

TEST(TriplesTest, ExpandsKnownPrefixes) {
  EXPECT_EQ(ExpandIri("dbr:India"), "http://dbpedia.org/resource/India");
  EXPECT_EQ(ExpandIri("<http://dbpedia.org/ontology/timeZone>"),
            "http://dbpedia.org/ontology/timeZone");
  EXPECT_EQ(ExpandIri("  plain "), "plain");
  EXPECT_TRUE(IsAbsoluteIri("http://x.org/a"));
  EXPECT_FALSE(IsAbsoluteIri("India"));
}

TEST(TriplesTest, RenamesVariablesInOrderOfAppearance) {
  const auto out = CanonicalizeTriples({"?x dbo:timeZone ?tz .", "?x rdf:type dbo:Country"});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], "?v0 <http://dbpedia.org/ontology/timeZone> ?v1");
  EXPECT_EQ(out[1],
            "?v0 <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
            "<http://dbpedia.org/ontology/Country>");
  EXPECT_EQ(CanonicalizeTriples(out), out);
  EXPECT_THROW(CanonicalizeTriples({"a b"}), ParseError);
}

TEST(CsvTest, QuotesAndRoundTrips) {
  const std::vector<std::string> row = {"plain", "a,b", "say \"hi\"", "line\nbreak", ""};
  std::stringstream ss;
  csv::WriteRow(ss, row);
  std::vector<std::string> back;
  ASSERT_TRUE(csv::ReadRow(ss, &back));
  EXPECT_EQ(back, row);
  EXPECT_FALSE(csv::ReadRow(ss, &back));
}

TEST(PerformanceMatrixTest, RejectsOutOfRange) {
  PerformanceMatrix m;
  EXPECT_THROW(m.Set("q", "c", 1.5), RangeError);
  EXPECT_THROW(m.Set("q", "c", -0.1), RangeError);
  m.Set("q", "c", 0.25);
  EXPECT_EQ(m.Find("q", "c"), 0.25);
  EXPECT_FALSE(m.Find("q", "d").has_value());
  EXPECT_EQ(m.ValueOrZero("q", "d"), 0.0);
}

TEST(PerformanceMatrixTest, CsvRoundTripIsExact) {
  PerformanceMatrix m;
  m.Set("q1", "a", 1.0);
  m.Set("q1", "b", 2.0 / 3.0);
  m.Set("q2", "a", 0.1);
  std::stringstream ss;
  m.WriteCsv(ss);
  EXPECT_EQ(PerformanceMatrix::ReadCsv(ss), m);
  EXPECT_EQ(m.MeanFor("a"), 0.55);
}

TEST(PerformanceMatrixTest, FormatScore) {
  EXPECT_EQ(FormatScore(1.0), "1.0000");
  EXPECT_EQ(FormatScore(0.5), "0.5000");
  EXPECT_EQ(FormatScore(0.123456789), "0.123456789");
}

Question Sample() {
  Question q;
  q.id = "q1";
  q.text = "What is the timezone of India?";
  q.gold[QATask::kNED] = {QATask::kNED, {"http://dbpedia.org/resource/India"}, {}};
  q.gold[QATask::kRL] = {QATask::kRL, {"http://dbpedia.org/ontology/timeZone"}, {}};
  q.gold[QATask::kQB] = {
      QATask::kQB, {}, CanonicalTripleSet({"dbr:India dbo:timeZone ?tz"})};
  return q;
}

TEST(DatasetTest, JsonRoundTrip) {
  const Question q = Sample();
  EXPECT_EQ(QuestionFromJson(QuestionToJson(q)), q);
}

TEST(DatasetTest, ValidationReportsEveryViolation) {
  Question a = Sample();
  Question b = Sample();  // duplicate id
  Question c = Sample();
  c.id = "q3";
  c.text = "   ";
  Question d = Sample();
  d.id = "q4";
  d.gold[QATask::kNED].items = {"India"};  // relative IRI
  const auto v = ValidateDataset({a, b, c, d});
  std::set<ViolationKind> kinds;
  for (const auto& x : v) kinds.insert(x.kind);
  EXPECT_TRUE(kinds.count(ViolationKind::kDuplicateId));
  EXPECT_TRUE(kinds.count(ViolationKind::kEmptyText));
  EXPECT_TRUE(kinds.count(ViolationKind::kRelativeIri));
  EXPECT_TRUE(ValidateDataset({a}).empty());
}

TEST(DatasetTest, LoadDatasetFailsWithRowIndex) {
  const fs::path path = fs::temp_directory_path() / "pipeforge_core_bad.json";
  Question bad = Sample();
  bad.text = "";
  WriteQuestions(path, {Sample(), bad});
  try {
    LoadDataset(path);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
  }
  fs::remove(path);
}

TEST(DatasetTest, FileRoundTrip) {
  const fs::path path = fs::temp_directory_path() / "pipeforge_core_ok.json";
  WriteQuestions(path, {Sample()});
  const auto back = LoadDataset(path);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0], Sample());
  fs::remove(path);
}

}  // namespace
}  // namespace pipeforge
