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

#ifndef ARGSUM_FEATURES_H_
#define ARGSUM_FEATURES_H_

#include <array>
#include <cstddef>
#include <istream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "argsum/corpus.h"
#include "argsum/resources.h"

namespace argsum {

// Feature families in their fixed output order.
enum class FeatureFamily {
  kReadability,
  kLiwcCurrent,
  kLiwcPrev,
  kSentiment,
  kDacPrev,
  kTurnPos,
  kEmbedding,
};

std::string_view FamilyName(FeatureFamily family);

struct FeatureConfig {
  std::vector<FeatureFamily> families;  // sorted, unique, non-empty
  bool use_coref = false;

  bool Has(FeatureFamily family) const;
  bool operator==(const FeatureConfig &) const = default;
};

// Builds a config from short names joined by ',' or '+': lc, lcp, r, snt,
// dac, st, w2v, or any full family name (readability, liwc_current, ...).
// "lcp" expands to liwc_current + liwc_prev. Throws ConfigError.
FeatureConfig ParseFeatureList(std::string_view spec);
std::string FeatureConfigName(const FeatureConfig &config);

struct FeatureVector {
  SentenceKey key;
  std::vector<std::string> names;
  std::vector<double> values;
};

// Word categories in the LIWC dictionary layout. Patterns ending in '*'
// match any token with that prefix.
class CategoryLexicon {
 public:
  static CategoryLexicon Parse(std::istream &in);
  static CategoryLexicon Parse(std::string_view text);
  static CategoryLexicon FromMap(
      const std::vector<std::pair<std::string, std::vector<std::string>>>
          &categories);

  const std::vector<std::string> &categories() const { return names_; }
  std::size_t size() const { return names_.size(); }

  // Indices of the categories a token belongs to, ascending, no repeats.
  std::vector<std::size_t> Match(std::string_view token) const;

 private:
  struct Pattern {
    std::string text;
    bool prefix = false;
    std::vector<std::size_t> categories;
  };

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::vector<std::size_t>> exact_;
  std::vector<Pattern> prefixes_;
};

class EmbeddingTable {
 public:
  // Text format with an optional "count dim" header line, then
  // "word v1 ... vd". Throws ParseError on ragged rows.
  static EmbeddingTable Parse(std::istream &in);

  void Add(std::string word, std::vector<double> vector);
  const std::vector<double> *Find(std::string_view word) const;
  int dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }

 private:
  int dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

using PolarityLexicon = std::unordered_map<std::string, double>;

// "word<TAB>score" lines, scores in [-1, 1].
PolarityLexicon ParsePolarityLexicon(std::istream &in);
PolarityLexicon ParsePolarityLexicon(std::string_view text);

// Immutable lexicons shared by all extraction calls.
struct FeatureResources {
  std::shared_ptr<const CategoryLexicon> categories;
  std::shared_ptr<const PolarityLexicon> polarity;
  std::shared_ptr<const EmbeddingTable> embeddings;
  WordSet stopwords;
  WordSet verbs;
  WordSet pronouns;

  // Bundled category, polarity, stopword, verb and pronoun lists; no
  // embeddings.
  static FeatureResources Bundled();
};

// Vowel groups (a e i o u y), minus a silent final 'e' after a consonant
// unless the word ends in consonant + "le"; at least 1. Non-letters are
// ignored. Throws InvalidArgument when no letters remain.
int CountSyllables(std::string_view word);

inline constexpr std::size_t kReadabilityCount = 8;
extern const std::array<std::string_view, kReadabilityCount> kReadabilityNames;

struct TextStats {
  int sentences = 1;
  int words = 0;
  int letters = 0;
  int syllables = 0;
  int complex_words = 0;  // three or more syllables
  int long_words = 0;     // more than six letters
};

TextStats ComputeTextStats(std::span<const std::string> tokens,
                           int sentences = 1);

// Flesch-Kincaid grade, ARI, Coleman-Liau, SMOG, Gunning Fog, Flesch
// reading ease, LIX, RIX. All zeros for a sentence without words.
std::array<double, kReadabilityCount> ReadabilityVector(
    const Sentence &sentence);
std::array<double, kReadabilityCount> ReadabilityFromStats(
    const TextStats &stats);

// Matched-token frequency per category, aligned with
// lexicon.categories(). All zeros without tokens.
std::vector<double> LexiconCategoryScores(const Sentence &sentence,
                                          const CategoryLexicon &lexicon);

// Scores of the sentence immediately before `sentence` in the dialog,
// regardless of turn or filter state; zeros for the first sentence.
std::vector<double> ContextLexiconScores(const Sentence &sentence,
                                         const Dialog &dialog,
                                         const CategoryLexicon &lexicon);

inline constexpr std::size_t kSentimentBuckets = 5;

// Fractions of polarity-matched tokens per bucket, very negative to very
// positive. Without matches the neutral bucket is 1.
std::array<double, kSentimentBuckets> SentimentBuckets(
    const Sentence &sentence, const PolarityLexicon &polarity);

bool IsQuestion(const Sentence &sentence);

// Which third of the turn (1, 2 or 3) holds sentence `index` of `length`.
int TurnThird(int index, int length);

std::vector<double> AverageEmbedding(const Sentence &sentence,
                                     const EmbeddingTable &table,
                                     const WordSet &stopwords);

// Replaces third-person pronouns with an antecedent from the previous two
// sentences of the dialog, preferring sentences by the same speaker. In
// the chosen sentence a capitalized non-initial word wins, otherwise the
// first content word (non-stopword, non-verb, three or more letters).
// Rewritten sentences keep their old text in `original_text`.
Dialog CorefReplace(const Dialog &dialog, const WordSet &pronouns,
                    const WordSet &stopwords, const WordSet &verbs);

// Feature names for a config; their count never depends on the sentence.
// Throws ConfigError if a family lacks its resource.
std::vector<std::string> FeatureNames(const FeatureConfig &config,
                                      const FeatureResources &resources);

// When config.use_coref is set the dialog is rewritten with CorefReplace
// first (unless `dialog_is_substituted`), so all text features see the
// substituted text.
FeatureVector AssembleFeatures(const Sentence &sentence, const Dialog &dialog,
                               const FeatureConfig &config,
                               const FeatureResources &resources,
                               bool dialog_is_substituted = false);

// Features for the kept sentences of a dialog, in reading order.
std::vector<FeatureVector> ExtractDialogFeatures(
    const Dialog &dialog, const FeatureConfig &config,
    const FeatureResources &resources);

}  // namespace argsum

#endif  // ARGSUM_FEATURES_H_
