// Copyright 2026 The argsum Authors.
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

#include "argsum/pyramid.h"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "argsum/error.h"
#include "oracles.h"
#include "test_util.h"

namespace argsum {
namespace {

Pyramid Table1Pyramid() {
  std::ifstream in(testing::FixturePath("table1_pyramid.jsonl"));
  return ParsePyramid(in);
}

SentenceAnnotation Annotate(std::map<std::string, std::set<std::string>> a) {
  SentenceAnnotation s;
  s.key = {"d", 0, 0};
  s.assignments = std::move(a);
  return s;
}

TEST(TierTest, Table1ContributorGroups) {
  const Pyramid p = Table1Pyramid();
  EXPECT_EQ(p.at("gun.1").tier, 5);
  EXPECT_EQ(p.at("gun.2").tier, 3);
  EXPECT_EQ(p.at("gun.3").tier, 1);
}

TEST(TierTest, RepeatedSummaryCountsOnce) {
  const std::vector<std::string> c = {"S1", "S1", "S2"};
  EXPECT_EQ(TierOfScu(c), 2);
  const std::vector<std::string> base = {"S1", "S2", "S3"};
  std::vector<std::string> dup = base;
  dup.insert(dup.end(), base.begin(), base.end());
  EXPECT_EQ(TierOfScu(base), TierOfScu(dup));
}

TEST(TierTest, EmptyAndOversizedContributorListsFail) {
  EXPECT_THROW(TierOfScu(std::vector<std::string>{}), InvalidArgument);
  const std::vector<std::string> six = {"a", "b", "c", "d", "e", "f"};
  EXPECT_THROW(MakeScu("x", "", six), ValidationError);
  std::istringstream in(R"({"scu_id": "x", "label_text": "", "contributors": []})");
  EXPECT_THROW(ParsePyramid(in), ParseError);
}

TEST(AggregateTest, MeanOfAssignedTiers) {
  const Pyramid p = Table1Pyramid();
  EXPECT_DOUBLE_EQ(AggregateSentenceScore(Annotate({{"a1", {"gun.1", "gun.2"}}}), p), 4.0);
  EXPECT_DOUBLE_EQ(AggregateSentenceScore(Annotate({{"a1", {"gun.3"}}}), p), 1.0);
  EXPECT_DOUBLE_EQ(AggregateSentenceScore(Annotate({{"a1", {}}}), p), 0.0);
  EXPECT_FALSE(GoldImportance(AggregateSentenceScore(Annotate({}), p)));
}

TEST(AggregateTest, PooledAndPerAnnotatorDiffer) {
  const Pyramid p = Table1Pyramid();
  const auto a = Annotate({{"a1", {"gun.1", "gun.2"}}, {"a2", {"gun.3"}}});
  EXPECT_DOUBLE_EQ(AggregateSentenceScore(a, p, TierAveraging::kPooled), 3.0);
  EXPECT_DOUBLE_EQ(AggregateSentenceScore(a, p, TierAveraging::kPerAnnotator), 2.5);
}

TEST(AggregateTest, UnknownScuIsNamed) {
  const Pyramid p = Table1Pyramid();
  try {
    AggregateSentenceScore(Annotate({{"a1", {"gun.9"}}}), p);
    FAIL();
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("gun.9"), std::string::npos);
  }
}

TEST(ImportanceTest, ThresholdIsInclusive) {
  EXPECT_TRUE(GoldImportance(4.0));
  EXPECT_TRUE(GoldImportance(3.0));
  EXPECT_FALSE(GoldImportance(2.9));
  const Pyramid p = Table1Pyramid();
  EXPECT_TRUE(GoldImportance(AggregateSentenceScore(Annotate({{"a1", {"gun.2"}}}), p)));
}

TEST(ImportanceTest, MonotoneInAverageTier) {
  bool previous = false;
  for (double t = 0.0; t <= 5.0; t += 0.05) {
    const bool now = GoldImportance(t);
    EXPECT_TRUE(!previous || now);
    previous = now;
  }
}

TEST(KappaTest, HandFixtures) {
  EXPECT_DOUBLE_EQ(CohenKappa(Labels{1, 0, 1, 0}, Labels{1, 0, 1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(CohenKappa(Labels{1, 1, 0, 0}, Labels{1, 0, 1, 0}), 0.0);
  EXPECT_DOUBLE_EQ(CohenKappa(Labels{1, 1, 1, 0}, Labels{1, 1, 0, 0}), 0.5);
}

TEST(KappaTest, DegenerateChanceAgreement) {
  EXPECT_DOUBLE_EQ(CohenKappa(Labels{1, 1, 1}, Labels{1, 1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(CohenKappa(Labels{0, 0}, Labels{0, 0}), 1.0);
}

TEST(KappaTest, ErrorsOnBadInput) {
  EXPECT_THROW(CohenKappa(Labels{1, 0}, Labels{1}), InvalidArgument);
  EXPECT_THROW(CohenKappa(Labels{}, Labels{}), InvalidArgument);
  EXPECT_THROW(AveragePairwiseKappa({{"a", {1, 0}}}), InvalidArgument);
}

TEST(KappaTest, SymmetricAndOneOnlyWhenIdentical) {
  const std::vector<Labels> vectors = {{1, 0, 1, 1, 0}, {0, 0, 1, 1, 0}, {1, 1, 0, 0, 1},
                                       {1, 0, 0, 1, 0}, {0, 1, 1, 0, 1}};
  for (const Labels &a : vectors) {
    for (const Labels &b : vectors) {
      const double k = CohenKappa(a, b);
      EXPECT_DOUBLE_EQ(k, CohenKappa(b, a));
      EXPECT_GE(k, -1.0);
      EXPECT_LE(k, 1.0);
      EXPECT_EQ(k == 1.0, a == b);
    }
  }
}

TEST(KappaTest, PairwiseAverageMatchesEnumeration) {
  const std::map<std::string, Labels> two = {{"a", {1, 1, 1, 0}}, {"b", {1, 1, 0, 0}}};
  EXPECT_DOUBLE_EQ(AveragePairwiseKappa(two), CohenKappa(two.at("a"), two.at("b")));
  const std::map<std::string, Labels> same = {
      {"a", {1, 0, 1}}, {"b", {1, 0, 1}}, {"c", {1, 0, 1}}};
  EXPECT_DOUBLE_EQ(AveragePairwiseKappa(same), 1.0);
  const std::map<std::string, Labels> three = {
      {"a", {1, 1, 1, 0}}, {"b", {1, 1, 0, 0}}, {"c", {1, 0, 1, 0}}};
  // Pairs: (a,b) 0.5, (a,c) 0.5, (b,c) 0.0.
  EXPECT_NEAR(AveragePairwiseKappa(three), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(AveragePairwiseKappa(three), oracles::EnumeratedMeanKappa(three), 1e-12);
}

TEST(GoldTest, ComputedPerSegmentedSentence) {
  Corpus corpus;
  corpus.topic = "t";
  corpus.dialogs.push_back(testing::MakeDialog(
      {"Guns kill people. Guns save lives.", "I disagree.", "You are wrong.", "No.",
       "Maybe.", "Fine."}));
  const Pyramid p = Table1Pyramid();
  std::vector<SentenceAnnotation> ann(2);
  ann[0].key = {"d", 0, 0};
  ann[0].assignments = {{"a1", {"gun.1"}}, {"a2", {"gun.2"}}};
  ann[1].key = {"d", 0, 1};
  ann[1].assignments = {{"a1", {"gun.3"}}};
  const auto gold = ComputeGoldLabels(corpus, p, ann);
  ASSERT_EQ(gold.size(), 7u);
  EXPECT_DOUBLE_EQ(gold[0].avg_tier, 4.0);
  EXPECT_TRUE(gold[0].important);
  EXPECT_FALSE(gold[1].important);
  EXPECT_DOUBLE_EQ(gold[2].avg_tier, 0.0);

  ann[1].key = {"d", 9, 0};
  EXPECT_THROW(ComputeGoldLabels(corpus, p, ann), ValidationError);
}

TEST(GoldTest, WriteParseRoundTrip) {
  std::vector<GoldLabel> labels = {{{"d", 0, 0}, 4.5, true}, {{"d", 1, 2}, 0.0, false}};
  std::stringstream ss;
  WriteGoldLabels(ss, labels);
  EXPECT_EQ(ParseGoldLabels(ss), labels);
}

TEST(AnnotationTest, ParseMergesAnnotators) {
  std::istringstream in(
      R"({"dialog_id": "d", "turn_index": 0, "index_in_turn": 0, "annotator": "a1", "scu_ids": ["x"]})"
      "\n"
      R"({"dialog_id": "d", "turn_index": 0, "index_in_turn": 0, "annotator": "a2", "scu_ids": []})"
      "\n");
  const auto ann = ParseAnnotations(in);
  ASSERT_EQ(ann.size(), 1u);
  EXPECT_EQ(ann[0].assignments.size(), 2u);
  EXPECT_TRUE(ann[0].assignments.at("a2").empty());
}

TEST(AnnotationTest, MalformedLineReportsPosition) {
  std::istringstream in("{\"dialog_id\": \"d\"}\nnot json\n");
  try {
    ParseAnnotations(in);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(AgreementTest, PairwiseOverSharedSentences) {
  const Pyramid p = Table1Pyramid();
  std::vector<SentenceAnnotation> ann(4);
  const std::vector<std::vector<std::string>> a1 = {{"gun.1"}, {"gun.1"}, {"gun.1"}, {}};
  const std::vector<std::vector<std::string>> a2 = {{"gun.2"}, {"gun.1"}, {"gun.3"}, {}};
  for (int i = 0; i < 4; ++i) {
    ann[i].key = {"d", i, 0};
    ann[i].assignments["a1"] = {a1[i].begin(), a1[i].end()};
    ann[i].assignments["a2"] = {a2[i].begin(), a2[i].end()};
  }
  const AgreementReport r = ComputeAgreement(p, ann);
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].sentences, 4);
  EXPECT_DOUBLE_EQ(r.pairs[0].kappa, CohenKappa(Labels{1, 1, 1, 0}, Labels{1, 1, 0, 0}));
  EXPECT_DOUBLE_EQ(r.mean_kappa, 0.5);
}

}  // namespace
}  // namespace argsum
