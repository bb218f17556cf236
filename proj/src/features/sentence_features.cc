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

#include <algorithm>
#include <cctype>
#include <array>
#include <string>

#include "argsum/error.h"
#include "argsum/features.h"

namespace argsum {
namespace {

constexpr std::array<std::string_view, 27> kQuestionOpeners = {
    "who",  "what",  "when",   "where", "why",  "how",   "which",
    "is",   "are",   "am",     "was",   "were", "do",    "does",
    "did",  "can",   "could",  "would", "will", "shall", "should",
    "have", "has",   "had",    "may",   "might", "must"};

}  // namespace

std::vector<double> LexiconCategoryScores(const Sentence &sentence,
                                          const CategoryLexicon &lexicon) {
  std::vector<double> scores(lexicon.size(), 0.0);
  if (sentence.tokens.empty()) return scores;
  for (const std::string &token : sentence.tokens) {
    for (std::size_t c : lexicon.Match(token)) scores[c] += 1.0;
  }
  const double n = static_cast<double>(sentence.tokens.size());
  for (double &s : scores) s /= n;
  return scores;
}

std::vector<double> ContextLexiconScores(const Sentence &sentence,
                                         const Dialog &dialog,
                                         const CategoryLexicon &lexicon) {
  const Sentence *previous = dialog.FindSentence(sentence.global_index - 1);
  if (previous == nullptr) return std::vector<double>(lexicon.size(), 0.0);
  return LexiconCategoryScores(*previous, lexicon);
}

std::array<double, kSentimentBuckets> SentimentBuckets(
    const Sentence &sentence, const PolarityLexicon &polarity) {
  std::array<double, kSentimentBuckets> buckets{};
  int matched = 0;
  for (const std::string &token : sentence.tokens) {
    auto it = polarity.find(token);
    if (it == polarity.end()) continue;
    const double s = it->second;
    std::size_t bucket;
    if (s <= -0.6) {
      bucket = 0;
    } else if (s <= -0.2) {
      bucket = 1;
    } else if (s < 0.2) {
      bucket = 2;
    } else if (s < 0.6) {
      bucket = 3;
    } else {
      bucket = 4;
    }
    buckets[bucket] += 1.0;
    ++matched;
  }
  if (matched == 0) {
    buckets[2] = 1.0;
    return buckets;
  }
  for (double &b : buckets) b /= matched;
  return buckets;
}

bool IsQuestion(const Sentence &sentence) {
  std::string_view text = sentence.text;
  while (!text.empty() && (std::isspace(static_cast<unsigned char>(text.back())) ||
                           text.back() == '"' || text.back() == '\'' ||
                           text.back() == ')')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.back() == '?') return true;
  if (sentence.tokens.empty()) return false;
  return std::find(kQuestionOpeners.begin(), kQuestionOpeners.end(),
                   sentence.tokens.front()) != kQuestionOpeners.end();
}

int TurnThird(int index, int length) {
  if (length < 1 || index < 0 || index >= length) {
    throw InvalidArgument("turn position " + std::to_string(index) +
                          " outside a turn of " + std::to_string(length) +
                          " sentences");
  }
  return std::min(3, 3 * index / length + 1);
}

std::vector<double> AverageEmbedding(const Sentence &sentence,
                                     const EmbeddingTable &table,
                                     const WordSet &stopwords) {
  std::vector<double> mean(static_cast<std::size_t>(table.dimension()), 0.0);
  int used = 0;
  for (const std::string &token : sentence.tokens) {
    if (stopwords.contains(token)) continue;
    const std::vector<double> *v = table.Find(token);
    if (v == nullptr) continue;
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += (*v)[i];
    ++used;
  }
  if (used > 0) {
    for (double &x : mean) x /= used;
  }
  return mean;
}

}  // namespace argsum
