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
#include <optional>
#include <string>
#include <vector>

#include "argsum/features.h"

namespace argsum {
namespace {

struct Candidate {
  std::string surface;
  std::string token;
  bool proper = false;
};

struct Located {
  const Sentence *sentence;
  const std::string *author;
};

std::optional<Candidate> FindCandidate(const Sentence &sentence,
                                       const WordSet &pronouns,
                                       const WordSet &stopwords,
                                       const WordSet &verbs) {
  const std::string &text =
      sentence.original_text.empty() ? sentence.text : sentence.original_text;
  const std::vector<TextSpan> spans = TokenSpans(text);
  const std::vector<std::string> tokens = Tokenize(text);
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (!std::isupper(static_cast<unsigned char>(text[spans[i].begin]))) {
      continue;
    }
    if (stopwords.contains(tokens[i]) || pronouns.contains(tokens[i])) continue;
    return Candidate{text.substr(spans[i].begin, spans[i].end - spans[i].begin),
                     tokens[i], true};
  }
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const std::string &t = tokens[i];
    if (t.size() < 3 || stopwords.contains(t) || verbs.contains(t) ||
        pronouns.contains(t)) {
      continue;
    }
    std::string surface =
        text.substr(spans[i].begin, spans[i].end - spans[i].begin);
    // A sentence-initial common noun loses its capital mid-sentence.
    if (i == 0) {
      for (char &c : surface) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return Candidate{std::move(surface), t, false};
  }
  return std::nullopt;
}

}  // namespace

Dialog CorefReplace(const Dialog &dialog, const WordSet &pronouns,
                    const WordSet &stopwords, const WordSet &verbs) {
  std::vector<Located> order;
  for (const Turn &turn : dialog.turns) {
    for (const Sentence &s : turn.sentences) order.push_back({&s, &turn.author});
  }

  Dialog out = dialog;
  std::vector<Sentence *> targets = out.MutableSentences();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Sentence &sentence = *order[i].sentence;
    const std::vector<TextSpan> spans = TokenSpans(sentence.text);
    bool has_pronoun = false;
    for (const std::string &t : sentence.tokens) {
      if (pronouns.contains(t)) has_pronoun = true;
    }
    if (!has_pronoun || i == 0 || spans.size() != sentence.tokens.size()) {
      continue;
    }

    std::vector<std::size_t> window;
    for (std::size_t back = 1; back <= 2 && back <= i; ++back) {
      if (*order[i - back].author == *order[i].author) window.push_back(i - back);
    }
    for (std::size_t back = 1; back <= 2 && back <= i; ++back) {
      if (*order[i - back].author != *order[i].author) window.push_back(i - back);
    }
    std::optional<Candidate> candidate;
    for (std::size_t w : window) {
      candidate = FindCandidate(*order[w].sentence, pronouns, stopwords, verbs);
      if (candidate) break;
    }
    if (!candidate) continue;

    Sentence &target = *targets[i];
    std::string text;
    std::size_t cursor = 0;
    for (std::size_t k = 0; k < spans.size(); ++k) {
      if (!pronouns.contains(sentence.tokens[k])) continue;
      text.append(sentence.text, cursor, spans[k].begin - cursor);
      std::string surface = candidate->surface;
      if (std::isupper(static_cast<unsigned char>(sentence.text[spans[k].begin])) &&
          !surface.empty()) {
        surface[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(surface[0])));
      }
      text += surface;
      cursor = spans[k].end;
      target.tokens[k] = candidate->token;
    }
    text.append(sentence.text, cursor, std::string::npos);
    target.original_text = sentence.text;
    target.text = std::move(text);
  }
  return out;
}

}  // namespace argsum
