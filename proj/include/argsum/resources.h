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

#ifndef ARGSUM_RESOURCES_H_
#define ARGSUM_RESOURCES_H_

#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>

namespace argsum {

using WordSet = std::unordered_set<std::string>;

// Reads one entry per line. Blank lines and lines starting with '#' are
// skipped; entries are trimmed and lowercased.
WordSet LoadWordList(std::istream &in);
WordSet LoadWordListFile(const std::string &path);
WordSet ParseWordList(std::string_view text);

namespace resources {

// Contents of a file from data/ compiled into the library, or an empty
// view if `name` is unknown. Available: abbreviations.txt, stopwords.txt,
// dictionary.txt, verbs.txt, pronouns.txt, categories.dic, polarity.tsv.
std::string_view Bundled(std::string_view name);

// Parsed bundled word lists. Built once on first use, immutable after.
const WordSet &Abbreviations();
const WordSet &Stopwords();
const WordSet &Dictionary();
const WordSet &Verbs();
const WordSet &ThirdPersonPronouns();

}  // namespace resources
}  // namespace argsum

#endif  // ARGSUM_RESOURCES_H_
