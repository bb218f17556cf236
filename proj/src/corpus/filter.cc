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

#include <string>
#include <string_view>

#include "argsum/corpus.h"
#include "argsum/error.h"

namespace argsum {
namespace {

bool IsDictionaryStem(std::string_view stem, const WordSet &dictionary) {
  if (stem.size() < 3) return false;
  std::string s(stem);
  if (dictionary.contains(s) || dictionary.contains(s + "e")) return true;
  // stopped -> stop, running -> run
  const std::size_t n = s.size();
  if (n >= 4 && s[n - 1] == s[n - 2]) {
    return dictionary.contains(s.substr(0, n - 1));
  }
  return false;
}

bool HasInflectionalSuffix(std::string_view token, const WordSet &dictionary) {
  if (token.ends_with("ed")) {
    return IsDictionaryStem(token.substr(0, token.size() - 2), dictionary);
  }
  if (token.ends_with("ing")) {
    return IsDictionaryStem(token.substr(0, token.size() - 3), dictionary);
  }
  return false;
}

}  // namespace

bool HasVerb(std::span<const std::string> tokens, const WordSet &verbs,
             const WordSet &dictionary) {
  for (const std::string &token : tokens) {
    if (verbs.contains(token) || HasInflectionalSuffix(token, dictionary)) {
      return true;
    }
  }
  return false;
}

void FilterSentences(std::span<Sentence> sentences, const WordSet &dictionary,
                     const WordSet &verbs) {
  if (dictionary.empty()) throw ConfigError("dictionary lexicon is empty");
  if (verbs.empty()) throw ConfigError("verb lexicon is empty");
  for (Sentence &s : sentences) {
    int known = 0;
    for (const std::string &token : s.tokens) {
      if (dictionary.contains(token)) ++known;
    }
    s.kept = known >= 3 && HasVerb(s.tokens, verbs, dictionary);
  }
}

void FilterCorpus(Corpus &corpus, const WordSet &dictionary,
                  const WordSet &verbs) {
  for (Dialog &dialog : corpus.dialogs) {
    for (Turn &turn : dialog.turns) {
      FilterSentences(turn.sentences, dictionary, verbs);
    }
  }
}

}  // namespace argsum
