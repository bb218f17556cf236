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

#ifndef ARGSUM_CORPUS_H_
#define ARGSUM_CORPUS_H_

// Two-party debate dialogs: parsing, validation, sentence segmentation,
// tokenization and the verb/dictionary sentence filter.
//
// Corpus files are JSON Lines, one dialog per line:
//
//   {"dialog_id": "d1", "topic": "gun_control",
//    "turns": [{"author": "S1", "index": 0, "text": "..."}, ...]}

#include <array>
#include <compare>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argsum/resources.h"

namespace argsum {

// Identifies a sentence by its position in the dialog structure.
struct SentenceKey {
  std::string dialog_id;
  int turn_index = 0;
  int index_in_turn = 0;

  auto operator<=>(const SentenceKey &) const = default;
  bool operator==(const SentenceKey &) const = default;
};

std::string ToString(const SentenceKey &key);

struct Sentence {
  std::string text;
  std::vector<std::string> tokens;
  std::string dialog_id;
  int turn_index = 0;
  int index_in_turn = 0;
  int global_index = 0;  // dialog-wide reading order
  bool kept = true;
  // Text before pronoun substitution; empty unless the sentence was
  // rewritten by CorefReplace.
  std::string original_text;

  SentenceKey key() const { return {dialog_id, turn_index, index_in_turn}; }
  bool operator==(const Sentence &) const = default;
};

struct Turn {
  std::string author;
  int index = 0;
  std::string raw_text;
  std::vector<Sentence> sentences;  // filled by SegmentDialog

  bool operator==(const Turn &) const = default;
};

struct Dialog {
  std::string dialog_id;
  std::array<std::string, 2> authors;  // in order of first appearance
  std::vector<Turn> turns;

  // Sentences in reading order. Valid until the dialog is modified.
  std::vector<const Sentence *> Sentences() const;
  std::vector<Sentence *> MutableSentences();
  // Copies of the sentences that survived filtering, in reading order.
  std::vector<Sentence> KeptSentences() const;
  const Sentence *FindSentence(int global_index) const;

  bool operator==(const Dialog &) const = default;
};

struct Corpus {
  std::string topic;
  std::vector<Dialog> dialogs;

  bool operator==(const Corpus &) const = default;
};

// Byte range [begin, end) into a string.
struct TextSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const TextSpan &) const = default;
};

// Parses a corpus holding dialogs of a single topic. Throws ParseError on
// malformed records (with the line number), ValidationError when a dialog
// breaks an invariant, and ValidationError if more than one topic occurs.
Corpus ParseCorpus(std::istream &in);

// Same, but groups dialogs by topic (in order of first appearance).
std::vector<Corpus> ParseCorpora(std::istream &in);

void WriteCorpus(std::ostream &out, const Corpus &corpus);

// Checks every corpus and dialog invariant. Throws ValidationError.
void ValidateCorpus(const Corpus &corpus);
void ValidateDialog(const Dialog &dialog);

// Splits after . ! ? (plus trailing quotes/brackets) when followed by
// whitespace and then an uppercase letter or an opening quote. A lone
// period after a single-letter initial or a listed abbreviation does not
// split. Spans are trimmed and cover all non-whitespace content.
std::vector<TextSpan> SegmentSentences(std::string_view text);
std::vector<TextSpan> SegmentSentences(std::string_view text,
                                       const WordSet &abbreviations);

// Lowercased word tokens made of ASCII letters and inner apostrophes.
// Digits and other punctuation separate tokens and are dropped.
std::vector<std::string> Tokenize(std::string_view text);
// Byte spans of the tokens returned by Tokenize, in the same order.
std::vector<TextSpan> TokenSpans(std::string_view text);

// Segments and tokenizes every turn, assigning sentence positions.
void SegmentDialog(Dialog &dialog, const WordSet &abbreviations);
void SegmentCorpus(Corpus &corpus, const WordSet &abbreviations);
void SegmentCorpus(Corpus &corpus);

// True if some token is a listed verb form, or ends in -ed/-ing on a
// dictionary stem of at least three letters.
bool HasVerb(std::span<const std::string> tokens, const WordSet &verbs,
             const WordSet &dictionary);

// Sets `kept` on each sentence: at least one verb and at least three
// dictionary tokens. Sentences are never removed or reordered. Throws
// ConfigError if either lexicon is empty.
void FilterSentences(std::span<Sentence> sentences, const WordSet &dictionary,
                     const WordSet &verbs);
void FilterCorpus(Corpus &corpus, const WordSet &dictionary,
                  const WordSet &verbs);

}  // namespace argsum

#endif  // ARGSUM_CORPUS_H_
