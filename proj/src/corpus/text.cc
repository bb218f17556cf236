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
#include <string>
#include <string_view>
#include <vector>

#include "argsum/corpus.h"

namespace argsum {
namespace {

bool IsAsciiAlpha(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 &&
         static_cast<unsigned char>(c) < 0x80;
}

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Length of an apostrophe at `i`: 1 for ASCII, 3 for U+2019, else 0.
std::size_t ApostropheAt(std::string_view text, std::size_t i) {
  if (text[i] == '\'') return 1;
  if (text.substr(i, 3) == "\xE2\x80\x99") return 3;
  return 0;
}

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Closing quote or bracket that may trail a terminator: length or 0.
std::size_t CloserAt(std::string_view text, std::size_t i) {
  const char c = text[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  if (text.substr(i, 3) == "\xE2\x80\x9D" || text.substr(i, 3) == "\xE2\x80\x99") {
    return 3;
  }
  return 0;
}

bool StartsSentence(std::string_view text, std::size_t i) {
  const char c = text[i];
  if (std::isupper(static_cast<unsigned char>(c)) && static_cast<unsigned char>(c) < 0x80) {
    return true;
  }
  if (c == '"' || c == '\'' || c == '(' || c == '[') return true;
  return text.substr(i, 3) == "\xE2\x80\x9C" || text.substr(i, 3) == "\xE2\x80\x98";
}

// The whitespace-delimited word ending just before position `dot`, with
// leading brackets/quotes removed, lowercased.
std::string WordBefore(std::string_view text, std::size_t dot) {
  std::size_t begin = dot;
  while (begin > 0 && !IsSpace(text[begin - 1])) --begin;
  std::string word;
  for (std::size_t i = begin; i < dot; ++i) {
    const char c = text[i];
    if (word.empty() && !std::isalnum(static_cast<unsigned char>(c))) continue;
    word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return word;
}

void PushTrimmed(std::string_view text, std::size_t begin, std::size_t end,
                 std::vector<TextSpan> &spans) {
  while (begin < end && IsSpace(text[begin])) ++begin;
  while (end > begin && IsSpace(text[end - 1])) --end;
  if (begin < end) spans.push_back({begin, end});
}

}  // namespace

std::vector<TextSpan> SegmentSentences(std::string_view text) {
  return SegmentSentences(text, resources::Abbreviations());
}

std::vector<TextSpan> SegmentSentences(std::string_view text,
                                       const WordSet &abbreviations) {
  std::vector<TextSpan> spans;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsTerminator(text[i])) {
      ++i;
      continue;
    }
    const std::size_t first = i;
    std::size_t j = i;
    while (j < text.size() && IsTerminator(text[j])) ++j;
    const bool lone_period = (j - first == 1 && text[first] == '.');
    while (j < text.size()) {
      const std::size_t len = CloserAt(text, j);
      if (len == 0) break;
      j += len;
    }
    if (j >= text.size()) {
      PushTrimmed(text, start, text.size(), spans);
      return spans;
    }
    if (!IsSpace(text[j])) {
      i = j;
      continue;
    }
    std::size_t k = j;
    while (k < text.size() && IsSpace(text[k])) ++k;
    if (k >= text.size()) {
      PushTrimmed(text, start, text.size(), spans);
      return spans;
    }
    bool boundary = StartsSentence(text, k);
    if (boundary && lone_period) {
      const std::string word = WordBefore(text, first);
      if (word.size() == 1 && IsAsciiAlpha(word[0])) boundary = false;
      if (abbreviations.contains(word)) boundary = false;
    }
    if (boundary) {
      PushTrimmed(text, start, j, spans);
      start = k;
    }
    i = k;
  }
  PushTrimmed(text, start, text.size(), spans);
  return spans;
}

std::vector<TextSpan> TokenSpans(std::string_view text) {
  std::vector<TextSpan> spans;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsAsciiAlpha(text[i]) && ApostropheAt(text, i) == 0) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    bool has_letter = false;
    while (i < text.size()) {
      if (IsAsciiAlpha(text[i])) {
        has_letter = true;
        ++i;
      } else if (const std::size_t len = ApostropheAt(text, i); len > 0) {
        i += len;
      } else {
        break;
      }
    }
    std::size_t end = i;
    // Drop leading and trailing apostrophes (quotes around a word).
    while (begin < end && !IsAsciiAlpha(text[begin])) {
      begin += ApostropheAt(text, begin);
    }
    while (end > begin && !IsAsciiAlpha(text[end - 1])) {
      end -= (text[end - 1] == '\'') ? 1 : 3;
    }
    if (has_letter && begin < end) spans.push_back({begin, end});
  }
  return spans;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  for (const TextSpan &span : TokenSpans(text)) {
    std::string token;
    for (std::size_t i = span.begin; i < span.end;) {
      if (const std::size_t len = ApostropheAt(text, i); len > 0) {
        token.push_back('\'');
        i += len;
      } else {
        token.push_back(static_cast<char>(
            std::tolower(static_cast<unsigned char>(text[i]))));
        ++i;
      }
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace argsum
