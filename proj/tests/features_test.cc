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

#include "argsum/features.h"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>

#include "argsum/error.h"
#include "oracles.h"
#include "test_util.h"

namespace argsum {
namespace {

using testing::MakeDialog;
using testing::MakeSentence;

CategoryLexicon FamilyLexicon() {
  return CategoryLexicon::FromMap({{"family", {"mom", "family"}}, {"death", {"kill*"}}});
}

EmbeddingTable ToyEmbeddings() {
  std::istringstream in("3 2\nguns 1 0\nkill 0 1\npeople 1 1\n");
  return EmbeddingTable::Parse(in);
}

FeatureResources ToyResources() {
  FeatureResources r = FeatureResources::Bundled();
  r.embeddings = std::make_shared<const EmbeddingTable>(ToyEmbeddings());
  return r;
}

TEST(SyllableTest, Examples) {
  EXPECT_EQ(CountSyllables("cat"), 1);
  EXPECT_EQ(CountSyllables("beautiful"), 3);
  EXPECT_EQ(CountSyllables("the"), 1);
  EXPECT_EQ(CountSyllables("able"), 2);
  EXPECT_EQ(CountSyllables("prove"), 1);
  EXPECT_EQ(CountSyllables("Table!"), 2);
  EXPECT_THROW(CountSyllables(""), InvalidArgument);
  EXPECT_THROW(CountSyllables("911"), InvalidArgument);
}

TEST(SyllableTest, HandCountedFixtureWords) {
  for (const auto &row : oracles::kReadabilityFixture) {
    const TextStats stats = ComputeTextStats(Tokenize(row.text));
    EXPECT_EQ(stats.words, row.words) << row.text;
    EXPECT_EQ(stats.letters, row.letters) << row.text;
    EXPECT_EQ(stats.syllables, row.syllables) << row.text;
    EXPECT_EQ(stats.complex_words, row.complex_words) << row.text;
    EXPECT_EQ(stats.long_words, row.long_words) << row.text;
  }
}

TEST(ReadabilityTest, TenSentenceFixtureMatchesHandValues) {
  for (const auto &row : oracles::kReadabilityFixture) {
    const auto got = ReadabilityVector(MakeSentence(row.text));
    const auto want = oracles::ReadabilityByHand(1, row.words, row.letters, row.syllables,
                                                 row.complex_words, row.long_words);
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_NEAR(got[i], want[i], 1e-9) << row.text << " " << kReadabilityNames[i];
    }
  }
}

TEST(ReadabilityTest, WholeFixtureAsOneText) {
  std::vector<std::string> tokens;
  double w = 0, l = 0, s = 0, c = 0, lw = 0;
  for (const auto &row : oracles::kReadabilityFixture) {
    for (auto &t : Tokenize(row.text)) tokens.push_back(t);
    w += row.words;
    l += row.letters;
    s += row.syllables;
    c += row.complex_words;
    lw += row.long_words;
  }
  const auto got = ReadabilityFromStats(ComputeTextStats(tokens, 10));
  const auto want = oracles::ReadabilityByHand(10, w, l, s, c, lw);
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-9);
}

TEST(ReadabilityTest, WorkedExamples) {
  const auto cat = ReadabilityVector(MakeSentence("The cat sat."));
  EXPECT_NEAR(cat[5], 206.835 - 1.015 * 3 - 84.6, 1e-9);
  const auto guns = ReadabilityVector(MakeSentence("Guns are dangerous weapons"));
  EXPECT_NEAR(guns[6], 54.0, 1e-9);
  EXPECT_NEAR(guns[7], 2.0, 1e-9);
  const auto empty = ReadabilityVector(MakeSentence("9/11"));
  for (double v : empty) EXPECT_EQ(v, 0.0);
}

TEST(LexiconTest, ParsesDictionaryLayout) {
  const CategoryLexicon lex = CategoryLexicon::Parse(
      "%\n1\tfamily\n2\tdeath\n%\nmom\t1\nkill*\t2\nfamily\t1\t2\n");
  EXPECT_EQ(lex.categories(), (std::vector<std::string>{"family", "death"}));
  EXPECT_EQ(lex.Match("killing"), (std::vector<std::size_t>{1}));
  EXPECT_EQ(lex.Match("family"), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(lex.Match("cat").empty());
}

TEST(LexiconTest, MalformedFilesRejected) {
  EXPECT_THROW(CategoryLexicon::Parse("%\n1\tfamily\n%\nmom\t7\n"), Error);
  EXPECT_THROW(CategoryLexicon::Parse("1\tfamily\nmom\t1\n"), Error);
  EXPECT_THROW(CategoryLexicon::Parse("%\n1\tfamily\n2\tfamily\n%\n"), Error);
}

TEST(LexiconTest, CategoryScores) {
  const CategoryLexicon lex = FamilyLexicon();
  const auto s = LexiconCategoryScores(MakeSentence("My mom loves my family"), lex);
  EXPECT_DOUBLE_EQ(s[0], 2.0 / 5);
  EXPECT_DOUBLE_EQ(s[1], 0.0);
  EXPECT_DOUBLE_EQ(LexiconCategoryScores(MakeSentence("They kill, killing"), lex)[1], 2.0 / 3);
  for (double v : LexiconCategoryScores(MakeSentence("Cats purr"), lex)) EXPECT_EQ(v, 0.0);
  for (double v : LexiconCategoryScores(MakeSentence(""), lex)) EXPECT_EQ(v, 0.0);
}

TEST(LexiconTest, ContextUsesPreviousSentenceEvenIfFiltered) {
  Dialog d = MakeDialog({"My mom. Guns kill.", "Family matters."});
  d.turns[0].sentences[0].kept = false;
  const CategoryLexicon lex = FamilyLexicon();
  const auto s = d.Sentences();
  EXPECT_EQ(ContextLexiconScores(*s[0], d, lex), (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(ContextLexiconScores(*s[1], d, lex), (std::vector<double>{0.5, 0.0}));
  EXPECT_EQ(ContextLexiconScores(*s[2], d, lex), (std::vector<double>{0.0, 0.5}));
}

TEST(SentimentTest, Buckets) {
  const PolarityLexicon p = {{"love", 0.8}, {"wonderful", 0.9}, {"good", 0.5},
                             {"bad", -0.5}, {"awful", -0.6}, {"okay", 0.1}};
  using A = std::array<double, kSentimentBuckets>;
  EXPECT_EQ(SentimentBuckets(MakeSentence("I love this wonderful idea"), p),
            (A{0, 0, 0, 0, 1}));
  EXPECT_EQ(SentimentBuckets(MakeSentence("Cats purr"), p), (A{0, 0, 1, 0, 0}));
  EXPECT_EQ(SentimentBuckets(MakeSentence("good and bad"), p), (A{0, 0.5, 0, 0.5, 0}));
  EXPECT_EQ(SentimentBuckets(MakeSentence("awful okay"), p), (A{0.5, 0, 0.5, 0, 0}));
}

TEST(SentimentTest, BucketsSumToOneWithBundledLexicon) {
  const FeatureResources r = FeatureResources::Bundled();
  for (const auto &row : oracles::kReadabilityFixture) {
    const auto b = SentimentBuckets(MakeSentence(row.text), *r.polarity);
    EXPECT_NEAR(std::accumulate(b.begin(), b.end(), 0.0), 1.0, 1e-12);
  }
}

TEST(PolarityTest, ParseAndRangeCheck) {
  EXPECT_EQ(ParsePolarityLexicon("good\t0.5\nbad\t-0.5\n").size(), 2u);
  EXPECT_THROW(ParsePolarityLexicon("good\t1.5\n"), Error);
  EXPECT_THROW(ParsePolarityLexicon("good\n"), Error);
}

TEST(QuestionTest, Examples) {
  EXPECT_TRUE(IsQuestion(MakeSentence(
      "And who made you master daddy that you think it is your place to grant or "
      "disallow anything to your fellow citizens?")));
  EXPECT_FALSE(IsQuestion(MakeSentence("And who made you master daddy that you think")));
  EXPECT_FALSE(IsQuestion(MakeSentence("Homosexuals are a deviant minority.")));
  EXPECT_TRUE(IsQuestion(MakeSentence("Sounds right to you?")));
  EXPECT_TRUE(IsQuestion(MakeSentence("Do you agree")));
  EXPECT_TRUE(IsQuestion(MakeSentence("Really?\" ")));
  EXPECT_FALSE(IsQuestion(MakeSentence("")));
}

TEST(TurnThirdTest, Examples) {
  EXPECT_EQ(TurnThird(0, 3), 1);
  EXPECT_EQ(TurnThird(1, 3), 2);
  EXPECT_EQ(TurnThird(2, 3), 3);
  EXPECT_EQ(TurnThird(0, 1), 1);
  const std::vector<int> four = {TurnThird(0, 4), TurnThird(1, 4), TurnThird(2, 4),
                                 TurnThird(3, 4)};
  EXPECT_EQ(four, (std::vector<int>{1, 1, 2, 3}));
  EXPECT_THROW(TurnThird(3, 3), InvalidArgument);
  EXPECT_THROW(TurnThird(-1, 3), InvalidArgument);
}

TEST(TurnThirdTest, AlwaysOneTwoOrThree) {
  for (int m = 1; m < 40; ++m) {
    for (int i = 0; i < m; ++i) {
      const int t = TurnThird(i, m);
      EXPECT_GE(t, 1);
      EXPECT_LE(t, 3);
    }
  }
}

TEST(EmbeddingTest, Averages) {
  const EmbeddingTable t = ToyEmbeddings();
  const WordSet stop = {"the"};
  EXPECT_EQ(AverageEmbedding(MakeSentence("cats purr"), t, stop), (std::vector<double>{0, 0}));
  EXPECT_EQ(AverageEmbedding(MakeSentence("the guns"), t, stop), (std::vector<double>{1, 0}));
  EXPECT_EQ(AverageEmbedding(MakeSentence("Guns kill!"), t, stop),
            (std::vector<double>{0.5, 0.5}));
}

TEST(EmbeddingTest, RaggedRowsRejected) {
  std::istringstream in("guns 1 0\nkill 0 1 2\n");
  EXPECT_THROW(EmbeddingTable::Parse(in), ParseError);
  std::istringstream no_header("guns 1 0\nkill 0 1\n");
  EXPECT_EQ(EmbeddingTable::Parse(no_header).dimension(), 2);
}

TEST(CorefTest, ReplacesPronounWithAntecedent) {
  const FeatureResources r = FeatureResources::Bundled();
  const Dialog d = MakeDialog({"Government is big. It spends."});
  const Dialog out = CorefReplace(d, r.pronouns, r.stopwords, r.verbs);
  const auto s = out.Sentences();
  EXPECT_EQ(s[1]->text, "Government spends.");
  EXPECT_EQ(s[1]->original_text, "It spends.");
  EXPECT_EQ(s[1]->tokens, (std::vector<std::string>{"government", "spends"}));
  EXPECT_EQ(s[0]->text, "Government is big.");
  EXPECT_TRUE(s[0]->original_text.empty());
}

TEST(CorefTest, PrefersCapitalizedNameAndSameSpeaker) {
  const FeatureResources r = FeatureResources::Bundled();
  const Dialog d = MakeDialog({"I think Obama spends money.", "Congress wrote laws.",
                               "He spends too much."});
  const Dialog out = CorefReplace(d, r.pronouns, r.stopwords, r.verbs);
  const auto s = out.Sentences();
  EXPECT_EQ(s[2]->text, "Obama spends too much.");
}

TEST(CorefTest, UnchangedWithoutAntecedent) {
  const FeatureResources r = FeatureResources::Bundled();
  const Dialog first = MakeDialog({"It is here."});
  EXPECT_EQ(CorefReplace(first, r.pronouns, r.stopwords, r.verbs), first);
  const Dialog none = MakeDialog({"I am. It is."});
  EXPECT_EQ(CorefReplace(none, r.pronouns, r.stopwords, r.verbs), none);
}

TEST(CorefTest, OnlyPronounTokensChangeAndCountIsPreserved) {
  const FeatureResources r = FeatureResources::Bundled();
  std::ifstream in(testing::MiniCorpusPath("corpus.jsonl"));
  for (Corpus &c : ParseCorpora(in)) {
    SegmentCorpus(c);
    for (const Dialog &d : c.dialogs) {
      const auto before = d.Sentences();
      const Dialog out = CorefReplace(d, r.pronouns, r.stopwords, r.verbs);
      const auto after = out.Sentences();
      for (std::size_t i = 0; i < before.size(); ++i) {
        ASSERT_EQ(before[i]->tokens.size(), after[i]->tokens.size());
        for (std::size_t k = 0; k < before[i]->tokens.size(); ++k) {
          if (before[i]->tokens[k] != after[i]->tokens[k]) {
            EXPECT_TRUE(r.pronouns.contains(before[i]->tokens[k]));
          }
        }
        EXPECT_EQ(Tokenize(after[i]->text), after[i]->tokens);
      }
    }
  }
}

TEST(FeatureListTest, ParsesAliasesAndFullNames) {
  const FeatureConfig lcp = ParseFeatureList("lcp+r");
  EXPECT_EQ(lcp.families, (std::vector<FeatureFamily>{FeatureFamily::kReadability,
                                                      FeatureFamily::kLiwcCurrent,
                                                      FeatureFamily::kLiwcPrev}));
  EXPECT_EQ(ParseFeatureList("r, lcp"), lcp);
  EXPECT_EQ(ParseFeatureList("readability,liwc_current,liwc_prev"), lcp);
  EXPECT_THROW(ParseFeatureList("bogus"), ConfigError);
  EXPECT_THROW(ParseFeatureList(""), ConfigError);
  EXPECT_EQ(FeatureConfigName(lcp), "readability+liwc_current+liwc_prev");
}

TEST(AssembleTest, BlockLengths) {
  const FeatureResources r = ToyResources();
  const std::size_t c = r.categories->size();
  const Dialog d = MakeDialog({"Guns kill people. My family is safe.", "Why?"});
  const Sentence &s = *d.Sentences()[1];
  EXPECT_EQ(AssembleFeatures(s, d, ParseFeatureList("r"), r).values.size(), 8u);
  EXPECT_EQ(AssembleFeatures(s, d, ParseFeatureList("lcp"), r).values.size(), 2 * (c + 2));
  EXPECT_EQ(AssembleFeatures(s, d, ParseFeatureList("snt"), r).values.size(), 5u);
  EXPECT_EQ(AssembleFeatures(s, d, ParseFeatureList("dac+st"), r).values.size(), 2u);
  EXPECT_EQ(AssembleFeatures(s, d, ParseFeatureList("w2v"), r).values.size(), 2u);
  const FeatureVector fv = AssembleFeatures(s, d, ParseFeatureList("lc"), r);
  EXPECT_EQ(fv.names.front(), "liwc_current." + r.categories->categories().front());
  EXPECT_EQ(fv.names.back(), "liwc_current.sixltr");
  EXPECT_EQ(fv.key, s.key());
}

TEST(AssembleTest, FirstSentenceHasZeroPreviousBlock) {
  const FeatureResources r = ToyResources();
  const Dialog d = MakeDialog({"Why would my family kill? Guns kill people."});
  const auto all = ParseFeatureList("lcp+dac");
  const FeatureVector first = AssembleFeatures(*d.Sentences()[0], d, all, r);
  const FeatureVector second = AssembleFeatures(*d.Sentences()[1], d, all, r);
  const std::size_t c = r.categories->size() + 2;
  for (std::size_t i = c; i < 2 * c + 1; ++i) EXPECT_EQ(first.values[i], 0.0);
  EXPECT_EQ(second.values.back(), 1.0);
  EXPECT_EQ(second.values[2 * c - 2], 5.0);
}

TEST(AssembleTest, LengthNeverDependsOnContent) {
  const FeatureResources r = ToyResources();
  const FeatureConfig all = ParseFeatureList("r,lcp,snt,dac,st,w2v");
  const std::size_t n = FeatureNames(all, r).size();
  std::ifstream in(testing::MiniCorpusPath("corpus.jsonl"));
  for (Corpus &c : ParseCorpora(in)) {
    SegmentCorpus(c);
    for (const Dialog &d : c.dialogs) {
      for (const FeatureVector &fv : ExtractDialogFeatures(d, all, r)) {
        ASSERT_EQ(fv.values.size(), n);
        ASSERT_EQ(fv.names.size(), n);
        for (std::size_t i = 0; i < n; ++i) {
          EXPECT_TRUE(std::isfinite(fv.values[i]));
          if (fv.names[i].starts_with("liwc_") && !fv.names[i].ends_with("wps") &&
              !fv.names[i].ends_with("sixltr")) {
            EXPECT_GE(fv.values[i], 0.0);
            EXPECT_LE(fv.values[i], 1.0);
          }
        }
      }
    }
  }
}

TEST(AssembleTest, MissingResourceNamesFamily) {
  FeatureResources r = FeatureResources::Bundled();
  const Dialog d = MakeDialog({"Guns kill people."});
  try {
    AssembleFeatures(*d.Sentences()[0], d, ParseFeatureList("w2v"), r);
    FAIL();
  } catch (const ConfigError &e) {
    EXPECT_NE(std::string(e.what()).find("embedding"), std::string::npos);
  }
  r.categories.reset();
  EXPECT_THROW(FeatureNames(ParseFeatureList("lc"), r), ConfigError);
}

TEST(AssembleTest, CorefFeedsTextFeatures) {
  FeatureResources r = FeatureResources::Bundled();
  r.categories = std::make_shared<const CategoryLexicon>(
      CategoryLexicon::FromMap({{"government", {"government"}}}));
  const Dialog d = MakeDialog({"Government is big. It spends."});
  FeatureConfig config = ParseFeatureList("lc");
  const Sentence &s = *d.Sentences()[1];
  EXPECT_EQ(AssembleFeatures(s, d, config, r).values[0], 0.0);
  config.use_coref = true;
  EXPECT_EQ(AssembleFeatures(s, d, config, r).values[0], 0.5);
  const auto rows = ExtractDialogFeatures(d, config, r);
  EXPECT_EQ(rows[1].values[0], 0.5);
}

TEST(AssembleTest, DeterministicAndKeptOnly) {
  const FeatureResources r = ToyResources();
  Dialog d = MakeDialog({"Guns kill people. My family is safe.", "Why? Because."});
  d.turns[1].sentences[1].kept = false;
  const FeatureConfig all = ParseFeatureList("r,lcp,snt,dac,st,w2v");
  const auto a = ExtractDialogFeatures(d, all, r);
  const auto b = ExtractDialogFeatures(d, all, r);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].values, b[i].values);
}

}  // namespace
}  // namespace argsum
