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

#include "argsum/resources.h"

#include <cctype>
#include <fstream>

#include "argsum/error.h"

namespace argsum {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

void AddLine(std::string_view line, WordSet &words) {
  line = Trim(line);
  if (line.empty() || line.front() == '#') return;
  std::string word(line);
  for (char &c : word) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  words.insert(std::move(word));
}

}  // namespace

WordSet LoadWordList(std::istream &in) {
  WordSet words;
  std::string line;
  while (std::getline(in, line)) AddLine(line, words);
  return words;
}

WordSet LoadWordListFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open word list: " + path);
  return LoadWordList(in);
}

WordSet ParseWordList(std::string_view text) {
  WordSet words;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    AddLine(text.substr(0, eol), words);
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return words;
}

namespace resources {

const WordSet &Abbreviations() {
  static const WordSet words = ParseWordList(Bundled("abbreviations.txt"));
  return words;
}

const WordSet &Stopwords() {
  static const WordSet words = ParseWordList(Bundled("stopwords.txt"));
  return words;
}

const WordSet &Dictionary() {
  static const WordSet words = ParseWordList(Bundled("dictionary.txt"));
  return words;
}

const WordSet &Verbs() {
  static const WordSet words = ParseWordList(Bundled("verbs.txt"));
  return words;
}

const WordSet &ThirdPersonPronouns() {
  static const WordSet words = ParseWordList(Bundled("pronouns.txt"));
  return words;
}

}  // namespace resources
}  // namespace argsum
