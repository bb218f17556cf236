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
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "argsum/error.h"
#include "argsum/features.h"

namespace argsum {
namespace {

std::vector<std::string> SplitFields(const std::string &line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

std::string Lower(std::string s) {
  for (char &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool IsBlank(const std::string &line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

CategoryLexicon CategoryLexicon::Parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return Parse(in);
}

CategoryLexicon CategoryLexicon::Parse(std::istream &in) {
  CategoryLexicon lexicon;
  std::map<std::string, std::size_t> id_to_index;
  std::map<std::string, std::vector<std::size_t>> patterns;
  std::string line;
  std::size_t line_no = 0;
  int delimiters = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    const std::vector<std::string> fields = SplitFields(line);
    if (fields[0] == "%") {
      ++delimiters;
      continue;
    }
    if (delimiters == 0) throw ParseError(line_no, "lexicon must start with '%'");
    if (delimiters == 1) {
      if (fields.size() != 2) {
        throw ParseError(line_no, "header lines are \"id<TAB>category\"");
      }
      const std::string name = fields[1];
      if (std::find(lexicon.names_.begin(), lexicon.names_.end(), name) !=
          lexicon.names_.end()) {
        throw ParseError(line_no, "duplicate category \"" + name + "\"");
      }
      if (!id_to_index.emplace(fields[0], lexicon.names_.size()).second) {
        throw ParseError(line_no, "duplicate category id " + fields[0]);
      }
      lexicon.names_.push_back(name);
      continue;
    }
    if (fields.size() < 2) {
      throw ParseError(line_no, "entry \"" + fields[0] + "\" has no category ids");
    }
    std::vector<std::size_t> &cats = patterns[Lower(fields[0])];
    for (std::size_t i = 1; i < fields.size(); ++i) {
      auto it = id_to_index.find(fields[i]);
      if (it == id_to_index.end()) {
        throw ParseError(line_no, "unknown category id " + fields[i]);
      }
      cats.push_back(it->second);
    }
  }
  if (delimiters < 2) throw ParseError(line_no, "lexicon header is not closed by '%'");
  if (lexicon.names_.empty()) throw ParseError(line_no, "lexicon has no categories");

  for (auto &[pattern, cats] : patterns) {
    std::sort(cats.begin(), cats.end());
    cats.erase(std::unique(cats.begin(), cats.end()), cats.end());
    if (pattern.size() > 1 && pattern.back() == '*') {
      lexicon.prefixes_.push_back({pattern.substr(0, pattern.size() - 1), true, cats});
    } else {
      lexicon.exact_[pattern] = cats;
    }
  }
  return lexicon;
}

CategoryLexicon CategoryLexicon::FromMap(
    const std::vector<std::pair<std::string, std::vector<std::string>>> &categories) {
  std::ostringstream text;
  text << "%\n";
  for (std::size_t i = 0; i < categories.size(); ++i) {
    text << i + 1 << '\t' << categories[i].first << '\n';
  }
  text << "%\n";
  for (std::size_t i = 0; i < categories.size(); ++i) {
    for (const std::string &word : categories[i].second) {
      text << word << '\t' << i + 1 << '\n';
    }
  }
  return Parse(text.str());
}

std::vector<std::size_t> CategoryLexicon::Match(std::string_view token) const {
  std::vector<std::size_t> out;
  if (auto it = exact_.find(std::string(token)); it != exact_.end()) {
    out = it->second;
  }
  for (const Pattern &p : prefixes_) {
    if (token.starts_with(p.text)) {
      out.insert(out.end(), p.categories.begin(), p.categories.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void EmbeddingTable::Add(std::string word, std::vector<double> vector) {
  if (vectors_.empty() && dimension_ == 0) {
    dimension_ = static_cast<int>(vector.size());
  }
  if (static_cast<int>(vector.size()) != dimension_) {
    throw InvalidArgument("embedding for \"" + word + "\" has dimension " +
                          std::to_string(vector.size()) + ", expected " +
                          std::to_string(dimension_));
  }
  vectors_.emplace(std::move(word), std::move(vector));
}

const std::vector<double> *EmbeddingTable::Find(std::string_view word) const {
  auto it = vectors_.find(std::string(word));
  return it == vectors_.end() ? nullptr : &it->second;
}

EmbeddingTable EmbeddingTable::Parse(std::istream &in) {
  EmbeddingTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    const std::vector<std::string> fields = SplitFields(line);
    if (line_no == 1 && fields.size() == 2 &&
        std::all_of(fields[0].begin(), fields[0].end(), ::isdigit) &&
        std::all_of(fields[1].begin(), fields[1].end(), ::isdigit)) {
      table.dimension_ = std::stoi(fields[1]);
      continue;
    }
    if (fields.size() < 2) throw ParseError(line_no, "embedding row without values");
    std::vector<double> values;
    values.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      char *end = nullptr;
      const double v = std::strtod(fields[i].c_str(), &end);
      if (end == fields[i].c_str() || *end != '\0' || !std::isfinite(v)) {
        throw ParseError(line_no, "bad embedding value \"" + fields[i] + "\"");
      }
      values.push_back(v);
    }
    if (table.dimension_ != 0 && static_cast<int>(values.size()) != table.dimension_) {
      throw ParseError(line_no, "embedding row has " + std::to_string(values.size()) +
                                    " values, expected " +
                                    std::to_string(table.dimension_));
    }
    std::string word = Lower(fields[0]);
    if (table.vectors_.contains(word)) continue;
    table.Add(std::move(word), std::move(values));
  }
  return table;
}

PolarityLexicon ParsePolarityLexicon(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParsePolarityLexicon(in);
}

PolarityLexicon ParsePolarityLexicon(std::istream &in) {
  PolarityLexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line) || line[0] == '#') continue;
    const std::vector<std::string> fields = SplitFields(line);
    if (fields.size() != 2) throw ParseError(line_no, "expected \"word<TAB>score\"");
    char *end = nullptr;
    const double score = std::strtod(fields[1].c_str(), &end);
    if (*end != '\0' || !(score >= -1.0 && score <= 1.0)) {
      throw ParseError(line_no, "polarity score must lie in [-1, 1]");
    }
    lexicon[Lower(fields[0])] = score;
  }
  return lexicon;
}

FeatureResources FeatureResources::Bundled() {
  FeatureResources r;
  r.categories = std::make_shared<const CategoryLexicon>(
      CategoryLexicon::Parse(resources::Bundled("categories.dic")));
  r.polarity = std::make_shared<const PolarityLexicon>(
      ParsePolarityLexicon(resources::Bundled("polarity.tsv")));
  r.stopwords = resources::Stopwords();
  r.verbs = resources::Verbs();
  r.pronouns = resources::ThirdPersonPronouns();
  return r;
}

}  // namespace argsum
