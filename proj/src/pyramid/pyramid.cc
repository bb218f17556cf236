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

#include "argsum/pyramid.h"

#include <map>
#include <set>
#include <string>
#include <utility>

#include "argsum/error.h"
#include "json.hpp"

namespace argsum {
namespace {

using nlohmann::json;

json ParseLine(const std::string &text, std::size_t line) {
  try {
    json record = json::parse(text);
    if (!record.is_object()) throw ParseError(line, "record must be an object");
    return record;
  } catch (const json::parse_error &e) {
    throw ParseError(line, std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T Get(const json &record, const char *name, std::size_t line) {
  auto it = record.find(name);
  if (it == record.end()) {
    throw ParseError(line, std::string("missing field \"") + name + "\"");
  }
  try {
    return it->get<T>();
  } catch (const json::exception &) {
    throw ParseError(line, std::string("field \"") + name + "\" has the wrong type");
  }
}

template <typename Fn>
void ForEachRecord(std::istream &in, Fn &&fn) {
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    fn(ParseLine(text, line), line);
  }
}

const ScuLabel &LookupScu(const Pyramid &pyramid, const std::string &scu_id,
                          const SentenceKey &key) {
  auto it = pyramid.find(scu_id);
  if (it == pyramid.end()) {
    throw ValidationError("sentence " + ToString(key) +
                          " references unknown scu_id \"" + scu_id + "\"");
  }
  return it->second;
}

// Annotator-level score: mean tier of that annotator's assignments.
double AnnotatorMean(const std::set<std::string> &scu_ids,
                     const Pyramid &pyramid, const SentenceKey &key) {
  if (scu_ids.empty()) return 0.0;
  double sum = 0.0;
  for (const std::string &id : scu_ids) sum += LookupScu(pyramid, id, key).tier;
  return sum / static_cast<double>(scu_ids.size());
}

}  // namespace

int TierOfScu(std::span<const std::string> contributors) {
  if (contributors.empty()) {
    throw InvalidArgument("an SCU needs at least one contributing summary");
  }
  const std::set<std::string> distinct(contributors.begin(), contributors.end());
  return static_cast<int>(distinct.size());
}

ScuLabel MakeScu(std::string scu_id, std::string label_text,
                 std::span<const std::string> contributors, int max_summaries) {
  ScuLabel scu;
  scu.tier = TierOfScu(contributors);
  if (scu.tier > max_summaries) {
    throw ValidationError("scu " + scu_id + " has " + std::to_string(scu.tier) +
                          " contributing summaries; at most " +
                          std::to_string(max_summaries) + " exist");
  }
  scu.scu_id = std::move(scu_id);
  scu.label_text = std::move(label_text);
  scu.contributor_summary_ids.insert(contributors.begin(), contributors.end());
  return scu;
}

double AggregateSentenceScore(const SentenceAnnotation &annotation,
                              const Pyramid &pyramid, TierAveraging averaging) {
  if (averaging == TierAveraging::kPerAnnotator) {
    if (annotation.assignments.empty()) return 0.0;
    double sum = 0.0;
    for (const auto &[annotator, ids] : annotation.assignments) {
      sum += AnnotatorMean(ids, pyramid, annotation.key);
    }
    return sum / static_cast<double>(annotation.assignments.size());
  }
  double sum = 0.0;
  int pairs = 0;
  for (const auto &[annotator, ids] : annotation.assignments) {
    for (const std::string &id : ids) {
      sum += LookupScu(pyramid, id, annotation.key).tier;
      ++pairs;
    }
  }
  return pairs == 0 ? 0.0 : sum / pairs;
}

double CohenKappa(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("kappa: label vectors differ in length (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
  if (a.empty()) throw InvalidArgument("kappa: empty label vectors");
  double agree = 0.0;
  double a_pos = 0.0;
  double b_pos = 0.0;
  bool identical = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] != 0 && a[i] != 1) || (b[i] != 0 && b[i] != 1)) {
      throw InvalidArgument("kappa: labels must be 0 or 1");
    }
    if (a[i] == b[i]) {
      agree += 1.0;
    } else {
      identical = false;
    }
    a_pos += a[i];
    b_pos += b[i];
  }
  const double n = static_cast<double>(a.size());
  const double p_o = agree / n;
  const double p_e = (a_pos / n) * (b_pos / n) +
                     ((n - a_pos) / n) * ((n - b_pos) / n);
  if (p_e >= 1.0) return identical ? 1.0 : 0.0;
  return (p_o - p_e) / (1.0 - p_e);
}

double AveragePairwiseKappa(const std::map<std::string, Labels> &annotators) {
  if (annotators.size() < 2) {
    throw InvalidArgument("pairwise kappa needs at least two annotators");
  }
  double sum = 0.0;
  int pairs = 0;
  for (auto i = annotators.begin(); i != annotators.end(); ++i) {
    for (auto j = std::next(i); j != annotators.end(); ++j) {
      sum += CohenKappa(i->second, j->second);
      ++pairs;
    }
  }
  return sum / pairs;
}

Pyramid ParsePyramid(std::istream &in, int max_summaries) {
  Pyramid pyramid;
  ForEachRecord(in, [&](const json &record, std::size_t line) {
    auto scu_id = Get<std::string>(record, "scu_id", line);
    auto label = Get<std::string>(record, "label_text", line);
    auto contributors = Get<std::vector<std::string>>(record, "contributors", line);
    if (contributors.empty()) {
      throw ParseError(line, "scu " + scu_id + " has no contributors");
    }
    ScuLabel scu = MakeScu(scu_id, std::move(label), contributors, max_summaries);
    if (!pyramid.emplace(scu_id, std::move(scu)).second) {
      throw ValidationError("duplicate scu_id \"" + scu_id + "\" (line " +
                            std::to_string(line) + ")");
    }
  });
  return pyramid;
}

std::vector<SentenceAnnotation> ParseAnnotations(std::istream &in) {
  std::map<SentenceKey, SentenceAnnotation> merged;
  ForEachRecord(in, [&](const json &record, std::size_t line) {
    SentenceKey key{Get<std::string>(record, "dialog_id", line),
                    Get<int>(record, "turn_index", line),
                    Get<int>(record, "index_in_turn", line)};
    auto annotator = Get<std::string>(record, "annotator", line);
    auto ids = Get<std::vector<std::string>>(record, "scu_ids", line);
    SentenceAnnotation &entry = merged[key];
    entry.key = key;
    auto [it, inserted] = entry.assignments.emplace(annotator, std::set<std::string>{});
    if (!inserted) {
      throw ValidationError("annotator \"" + annotator + "\" labels sentence " +
                            ToString(key) + " twice (line " +
                            std::to_string(line) + ")");
    }
    it->second.insert(ids.begin(), ids.end());
  });
  std::vector<SentenceAnnotation> out;
  out.reserve(merged.size());
  for (auto &[key, annotation] : merged) out.push_back(std::move(annotation));
  return out;
}

std::vector<GoldLabel> ComputeGoldLabels(
    const Corpus &corpus, const Pyramid &pyramid,
    std::span<const SentenceAnnotation> annotations, const GoldOptions &options) {
  std::map<SentenceKey, const SentenceAnnotation *> by_key;
  for (const SentenceAnnotation &a : annotations) by_key[a.key] = &a;

  std::vector<GoldLabel> labels;
  std::size_t matched = 0;
  for (const Dialog &dialog : corpus.dialogs) {
    for (const Sentence *s : dialog.Sentences()) {
      GoldLabel label;
      label.key = s->key();
      auto it = by_key.find(label.key);
      if (it != by_key.end()) {
        label.avg_tier = AggregateSentenceScore(*it->second, pyramid, options.averaging);
        ++matched;
      }
      label.important = GoldImportance(label.avg_tier, options.threshold);
      labels.push_back(std::move(label));
    }
  }
  if (matched != by_key.size()) {
    std::set<SentenceKey> known;
    for (const GoldLabel &l : labels) known.insert(l.key);
    for (const auto &[key, annotation] : by_key) {
      if (!known.contains(key)) {
        throw ValidationError("annotation for sentence " + ToString(key) +
                              " which is not in the segmented corpus");
      }
    }
  }
  return labels;
}

void WriteGoldLabels(std::ostream &out, std::span<const GoldLabel> labels) {
  for (const GoldLabel &l : labels) {
    json record = {{"dialog_id", l.key.dialog_id},
                   {"turn_index", l.key.turn_index},
                   {"index_in_turn", l.key.index_in_turn},
                   {"avg_tier", l.avg_tier},
                   {"important", l.important}};
    out << record.dump() << '\n';
  }
}

std::vector<GoldLabel> ParseGoldLabels(std::istream &in) {
  std::vector<GoldLabel> labels;
  ForEachRecord(in, [&](const json &record, std::size_t line) {
    GoldLabel l;
    l.key = {Get<std::string>(record, "dialog_id", line),
             Get<int>(record, "turn_index", line),
             Get<int>(record, "index_in_turn", line)};
    l.avg_tier = Get<double>(record, "avg_tier", line);
    l.important = Get<bool>(record, "important", line);
    labels.push_back(std::move(l));
  });
  return labels;
}

AgreementReport ComputeAgreement(const Pyramid &pyramid,
                                 std::span<const SentenceAnnotation> annotations,
                                 const GoldOptions &options) {
  // annotator -> sentence -> binary label
  std::map<std::string, std::map<SentenceKey, int>> labels;
  for (const SentenceAnnotation &a : annotations) {
    for (const auto &[annotator, ids] : a.assignments) {
      const double mean = AnnotatorMean(ids, pyramid, a.key);
      labels[annotator][a.key] = GoldImportance(mean, options.threshold) ? 1 : 0;
    }
  }
  AgreementReport report;
  for (auto i = labels.begin(); i != labels.end(); ++i) {
    for (auto j = std::next(i); j != labels.end(); ++j) {
      Labels a;
      Labels b;
      for (const auto &[key, value] : i->second) {
        auto it = j->second.find(key);
        if (it == j->second.end()) continue;
        a.push_back(value);
        b.push_back(it->second);
      }
      if (a.empty()) continue;
      report.pairs.push_back({i->first, j->first, CohenKappa(a, b),
                              static_cast<int>(a.size())});
    }
  }
  if (!report.pairs.empty()) {
    double sum = 0.0;
    for (const PairAgreement &p : report.pairs) sum += p.kappa;
    report.mean_kappa = sum / static_cast<double>(report.pairs.size());
  }
  return report;
}

}  // namespace argsum
