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

#include <cctype>
#include <cmath>

#include "argsum/error.h"
#include "argsum/features.h"

namespace argsum {
namespace {

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

int LetterCount(std::string_view word) {
  int n = 0;
  for (char c : word) {
    if (std::isalpha(static_cast<unsigned char>(c))) ++n;
  }
  return n;
}

}  // namespace

const std::array<std::string_view, kReadabilityCount> kReadabilityNames = {
    "flesch_kincaid", "ari", "coleman_liau", "smog",
    "gunning_fog", "flesch_reading_ease", "lix", "rix"};

int CountSyllables(std::string_view word) {
  std::string letters;
  for (char c : word) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      letters.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (letters.empty()) {
    throw InvalidArgument("cannot count syllables of \"" + std::string(word) + "\"");
  }
  int groups = 0;
  bool in_group = false;
  for (char c : letters) {
    const bool vowel = IsVowel(c);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  const std::size_t n = letters.size();
  if (n >= 2 && letters[n - 1] == 'e' && !IsVowel(letters[n - 2])) {
    const bool consonant_le =
        letters[n - 2] == 'l' && n >= 3 && !IsVowel(letters[n - 3]);
    if (!consonant_le) --groups;
  }
  return groups < 1 ? 1 : groups;
}

TextStats ComputeTextStats(std::span<const std::string> tokens, int sentences) {
  TextStats stats;
  stats.sentences = sentences;
  for (const std::string &token : tokens) {
    const int letters = LetterCount(token);
    if (letters == 0) continue;
    const int syllables = CountSyllables(token);
    ++stats.words;
    stats.letters += letters;
    stats.syllables += syllables;
    if (syllables >= 3) ++stats.complex_words;
    if (letters > 6) ++stats.long_words;
  }
  return stats;
}

std::array<double, kReadabilityCount> ReadabilityFromStats(const TextStats &stats) {
  std::array<double, kReadabilityCount> out{};
  if (stats.words == 0 || stats.sentences <= 0) return out;
  const double words = stats.words;
  const double sentences = stats.sentences;
  const double words_per_sentence = words / sentences;
  const double syllables_per_word = stats.syllables / words;
  const double letters_per_word = stats.letters / words;
  const double complex_ratio = stats.complex_words / words;

  out[0] = 0.39 * words_per_sentence + 11.8 * syllables_per_word - 15.59;
  out[1] = 4.71 * letters_per_word + 0.5 * words_per_sentence - 21.43;
  out[2] = 0.0588 * (100.0 * letters_per_word) -
           0.296 * (100.0 * sentences / words) - 15.8;
  out[3] = 1.0430 * std::sqrt(stats.complex_words * 30.0 / sentences) + 3.1291;
  out[4] = 0.4 * (words_per_sentence + 100.0 * complex_ratio);
  out[5] = 206.835 - 1.015 * words_per_sentence - 84.6 * syllables_per_word;
  out[6] = words_per_sentence + 100.0 * stats.long_words / words;
  out[7] = stats.long_words / sentences;
  return out;
}

std::array<double, kReadabilityCount> ReadabilityVector(const Sentence &sentence) {
  return ReadabilityFromStats(ComputeTextStats(sentence.tokens, 1));
}

}  // namespace argsum
