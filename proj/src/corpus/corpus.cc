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

#include "argsum/corpus.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "argsum/error.h"
#include "json.hpp"

namespace argsum {
namespace {

using nlohmann::json;

const json &Field(const json &record, const char *name, std::size_t line) {
  auto it = record.find(name);
  if (it == record.end()) {
    throw ParseError(line, std::string("missing field \"") + name + "\"");
  }
  return *it;
}

std::string StringField(const json &record, const char *name,
                        std::size_t line) {
  const json &value = Field(record, name, line);
  if (!value.is_string()) {
    throw ParseError(line, std::string("field \"") + name + "\" must be a string");
  }
  return value.get<std::string>();
}

int IntField(const json &record, const char *name, std::size_t line) {
  const json &value = Field(record, name, line);
  if (!value.is_number_integer()) {
    throw ParseError(line, std::string("field \"") + name + "\" must be an integer");
  }
  return value.get<int>();
}

struct ParsedDialog {
  std::string topic;
  Dialog dialog;
};

ParsedDialog ParseDialogRecord(const std::string &text, std::size_t line) {
  json record;
  try {
    record = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(line, std::string("invalid JSON: ") + e.what());
  }
  if (!record.is_object()) throw ParseError(line, "record must be an object");

  ParsedDialog parsed;
  parsed.dialog.dialog_id = StringField(record, "dialog_id", line);
  parsed.topic = StringField(record, "topic", line);
  const json &turns = Field(record, "turns", line);
  if (!turns.is_array()) throw ParseError(line, "field \"turns\" must be an array");

  std::vector<std::string> authors;
  for (const json &t : turns) {
    if (!t.is_object()) throw ParseError(line, "turn must be an object");
    Turn turn;
    turn.author = StringField(t, "author", line);
    turn.index = IntField(t, "index", line);
    turn.raw_text = StringField(t, "text", line);
    if (std::find(authors.begin(), authors.end(), turn.author) == authors.end()) {
      authors.push_back(turn.author);
    }
    parsed.dialog.turns.push_back(std::move(turn));
  }
  if (authors.size() != 2) {
    throw ValidationError("dialog " + parsed.dialog.dialog_id +
                          ": expected exactly 2 authors, found " +
                          std::to_string(authors.size()));
  }
  parsed.dialog.authors = {authors[0], authors[1]};
  ValidateDialog(parsed.dialog);
  return parsed;
}

std::pair<std::string, std::string> AuthorPair(const Dialog &dialog) {
  return std::minmax(dialog.authors[0], dialog.authors[1]);
}

}  // namespace

std::string ToString(const SentenceKey &key) {
  return key.dialog_id + ":" + std::to_string(key.turn_index) + ":" +
         std::to_string(key.index_in_turn);
}

std::vector<const Sentence *> Dialog::Sentences() const {
  std::vector<const Sentence *> out;
  for (const Turn &turn : turns) {
    for (const Sentence &s : turn.sentences) out.push_back(&s);
  }
  return out;
}

std::vector<Sentence *> Dialog::MutableSentences() {
  std::vector<Sentence *> out;
  for (Turn &turn : turns) {
    for (Sentence &s : turn.sentences) out.push_back(&s);
  }
  return out;
}

std::vector<Sentence> Dialog::KeptSentences() const {
  std::vector<Sentence> out;
  for (const Turn &turn : turns) {
    for (const Sentence &s : turn.sentences) {
      if (s.kept) out.push_back(s);
    }
  }
  return out;
}

const Sentence *Dialog::FindSentence(int global_index) const {
  for (const Turn &turn : turns) {
    for (const Sentence &s : turn.sentences) {
      if (s.global_index == global_index) return &s;
    }
  }
  return nullptr;
}

void ValidateDialog(const Dialog &dialog) {
  const std::string &id = dialog.dialog_id;
  if (id.empty()) throw ValidationError("dialog with empty dialog_id");
  if (dialog.authors[0].empty() || dialog.authors[0] == dialog.authors[1]) {
    throw ValidationError("dialog " + id + ": needs two distinct authors");
  }
  std::map<std::string, int> turn_counts;
  for (std::size_t i = 0; i < dialog.turns.size(); ++i) {
    const Turn &turn = dialog.turns[i];
    if (turn.index != static_cast<int>(i)) {
      throw ValidationError("dialog " + id + ": turn at position " +
                            std::to_string(i) + " has index " +
                            std::to_string(turn.index) +
                            " (indices must run 0..n-1 in order)");
    }
    if (turn.author != dialog.authors[0] && turn.author != dialog.authors[1]) {
      throw ValidationError("dialog " + id + ": turn " + std::to_string(i) +
                            " by unknown author \"" + turn.author + "\"");
    }
    ++turn_counts[turn.author];
  }
  for (const std::string &author : dialog.authors) {
    const int count = turn_counts[author];
    if (count < 3) {
      throw ValidationError("dialog " + id + ": author \"" + author +
                            "\" has " + std::to_string(count) +
                            " turns (at least 3 required)");
    }
  }
}

void ValidateCorpus(const Corpus &corpus) {
  std::set<std::string> ids;
  std::map<std::pair<std::string, std::string>, std::string> pairs;
  for (const Dialog &dialog : corpus.dialogs) {
    ValidateDialog(dialog);
    if (!ids.insert(dialog.dialog_id).second) {
      throw ValidationError("duplicate dialog_id \"" + dialog.dialog_id + "\"");
    }
    auto [it, inserted] = pairs.emplace(AuthorPair(dialog), dialog.dialog_id);
    if (!inserted) {
      throw ValidationError("dialogs " + it->second + " and " +
                            dialog.dialog_id + " share the author pair (" +
                            it->first.first + ", " + it->first.second +
                            ") in topic " + corpus.topic);
    }
  }
}

std::vector<Corpus> ParseCorpora(std::istream &in) {
  std::vector<Corpus> corpora;
  std::set<std::string> ids;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    ParsedDialog parsed = ParseDialogRecord(text, line);
    if (!ids.insert(parsed.dialog.dialog_id).second) {
      throw ValidationError("duplicate dialog_id \"" +
                            parsed.dialog.dialog_id + "\" (line " +
                            std::to_string(line) + ")");
    }
    auto it = std::find_if(corpora.begin(), corpora.end(), [&](const Corpus &c) {
      return c.topic == parsed.topic;
    });
    if (it == corpora.end()) {
      corpora.push_back(Corpus{parsed.topic, {}});
      it = std::prev(corpora.end());
    }
    it->dialogs.push_back(std::move(parsed.dialog));
  }
  for (const Corpus &corpus : corpora) ValidateCorpus(corpus);
  return corpora;
}

Corpus ParseCorpus(std::istream &in) {
  std::vector<Corpus> corpora = ParseCorpora(in);
  if (corpora.empty()) return Corpus{};
  if (corpora.size() > 1) {
    throw ValidationError("corpus mixes topics \"" + corpora[0].topic +
                          "\" and \"" + corpora[1].topic + "\"");
  }
  return std::move(corpora.front());
}

void WriteCorpus(std::ostream &out, const Corpus &corpus) {
  for (const Dialog &dialog : corpus.dialogs) {
    json turns = json::array();
    for (const Turn &turn : dialog.turns) {
      turns.push_back(
          {{"author", turn.author}, {"index", turn.index}, {"text", turn.raw_text}});
    }
    json record = {{"dialog_id", dialog.dialog_id},
                   {"topic", corpus.topic},
                   {"turns", std::move(turns)}};
    out << record.dump() << '\n';
  }
}

void SegmentDialog(Dialog &dialog, const WordSet &abbreviations) {
  int global = 0;
  for (Turn &turn : dialog.turns) {
    turn.sentences.clear();
    int position = 0;
    for (const TextSpan &span : SegmentSentences(turn.raw_text, abbreviations)) {
      Sentence s;
      s.text = turn.raw_text.substr(span.begin, span.end - span.begin);
      s.tokens = Tokenize(s.text);
      s.dialog_id = dialog.dialog_id;
      s.turn_index = turn.index;
      s.index_in_turn = position++;
      s.global_index = global++;
      turn.sentences.push_back(std::move(s));
    }
  }
}

void SegmentCorpus(Corpus &corpus, const WordSet &abbreviations) {
  for (Dialog &dialog : corpus.dialogs) SegmentDialog(dialog, abbreviations);
}

void SegmentCorpus(Corpus &corpus) {
  SegmentCorpus(corpus, resources::Abbreviations());
}

}  // namespace argsum
