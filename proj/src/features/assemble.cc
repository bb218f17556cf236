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
#include <array>
#include <cctype>
#include <string>
#include <utility>

#include "argsum/error.h"
#include "argsum/features.h"

namespace argsum {
namespace {

struct FamilyAlias {
  std::string_view name;
  std::vector<FeatureFamily> families;
};

const std::vector<FamilyAlias> &Aliases() {
  static const std::vector<FamilyAlias> aliases = {
      {"lc", {FeatureFamily::kLiwcCurrent}},
      {"lcp", {FeatureFamily::kLiwcCurrent, FeatureFamily::kLiwcPrev}},
      {"r", {FeatureFamily::kReadability}},
      {"snt", {FeatureFamily::kSentiment}},
      {"dac", {FeatureFamily::kDacPrev}},
      {"st", {FeatureFamily::kTurnPos}},
      {"w2v", {FeatureFamily::kEmbedding}},
  };
  return aliases;
}

constexpr std::array<FeatureFamily, 7> kAllFamilies = {
    FeatureFamily::kReadability, FeatureFamily::kLiwcCurrent,
    FeatureFamily::kLiwcPrev,    FeatureFamily::kSentiment,
    FeatureFamily::kDacPrev,     FeatureFamily::kTurnPos,
    FeatureFamily::kEmbedding};

constexpr std::array<std::string_view, kSentimentBuckets> kSentimentNames = {
    "very_negative", "negative", "neutral", "positive", "very_positive"};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void RequireResources(const FeatureConfig &config,
                      const FeatureResources &resources) {
  for (FeatureFamily f : config.families) {
    const bool missing =
        ((f == FeatureFamily::kLiwcCurrent || f == FeatureFamily::kLiwcPrev) &&
         (!resources.categories || resources.categories->size() == 0)) ||
        (f == FeatureFamily::kSentiment &&
         (!resources.polarity || resources.polarity->empty())) ||
        (f == FeatureFamily::kEmbedding &&
         (!resources.embeddings || resources.embeddings->dimension() == 0));
    if (missing) {
      throw ConfigError("feature family " + std::string(FamilyName(f)) +
                        " needs a resource that is not loaded");
    }
  }
}

void AppendLiwcBlock(const Sentence *sentence, const CategoryLexicon &lexicon,
                     std::vector<double> &values) {
  if (sentence == nullptr) {
    values.insert(values.end(), lexicon.size() + 2, 0.0);
    return;
  }
  const std::vector<double> scores = LexiconCategoryScores(*sentence, lexicon);
  values.insert(values.end(), scores.begin(), scores.end());
  double six = 0;
  for (const std::string &t : sentence->tokens) {
    if (t.size() > 6) six += 1;
  }
  values.push_back(static_cast<double>(sentence->tokens.size()));
  values.push_back(six);
}

int TurnLength(const Dialog &dialog, const Sentence &sentence) {
  for (const Turn &turn : dialog.turns) {
    if (turn.index == sentence.turn_index) {
      return static_cast<int>(turn.sentences.size());
    }
  }
  throw InvalidArgument("sentence " + ToString(sentence.key()) +
                        " is not part of dialog " + dialog.dialog_id);
}

FeatureVector Assemble(const Sentence &sentence, const Dialog &dialog,
                       const FeatureConfig &config,
                       const FeatureResources &resources) {
  FeatureVector fv;
  fv.key = sentence.key();
  fv.names = FeatureNames(config, resources);
  const Sentence *previous = dialog.FindSentence(sentence.global_index - 1);
  std::vector<double> &v = fv.values;
  for (FeatureFamily f : config.families) {
    switch (f) {
      case FeatureFamily::kReadability: {
        const auto r = ReadabilityVector(sentence);
        v.insert(v.end(), r.begin(), r.end());
        break;
      }
      case FeatureFamily::kLiwcCurrent:
        AppendLiwcBlock(&sentence, *resources.categories, v);
        break;
      case FeatureFamily::kLiwcPrev:
        AppendLiwcBlock(previous, *resources.categories, v);
        break;
      case FeatureFamily::kSentiment: {
        const auto s = SentimentBuckets(sentence, *resources.polarity);
        v.insert(v.end(), s.begin(), s.end());
        break;
      }
      case FeatureFamily::kDacPrev:
        v.push_back(previous != nullptr && IsQuestion(*previous) ? 1.0 : 0.0);
        break;
      case FeatureFamily::kTurnPos:
        v.push_back(TurnThird(sentence.index_in_turn,
                              TurnLength(dialog, sentence)));
        break;
      case FeatureFamily::kEmbedding: {
        const auto e = AverageEmbedding(sentence, *resources.embeddings,
                                        resources.stopwords);
        v.insert(v.end(), e.begin(), e.end());
        break;
      }
    }
  }
  return fv;
}

}  // namespace

std::string_view FamilyName(FeatureFamily family) {
  switch (family) {
    case FeatureFamily::kReadability: return "readability";
    case FeatureFamily::kLiwcCurrent: return "liwc_current";
    case FeatureFamily::kLiwcPrev: return "liwc_prev";
    case FeatureFamily::kSentiment: return "sentiment";
    case FeatureFamily::kDacPrev: return "dac_prev";
    case FeatureFamily::kTurnPos: return "turn_pos";
    case FeatureFamily::kEmbedding: return "embedding";
  }
  return "unknown";
}

bool FeatureConfig::Has(FeatureFamily family) const {
  return std::find(families.begin(), families.end(), family) != families.end();
}

FeatureConfig ParseFeatureList(std::string_view spec) {
  FeatureConfig config;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find_first_of(",+", start);
    if (end == std::string_view::npos) end = spec.size();
    const std::string_view item = Trim(spec.substr(start, end - start));
    start = end + 1;
    if (item.empty()) {
      if (end == spec.size() && !config.families.empty()) break;
      throw ConfigError("empty entry in feature list \"" + std::string(spec) + "\"");
    }
    bool found = false;
    for (const FamilyAlias &alias : Aliases()) {
      if (alias.name == item) {
        config.families.insert(config.families.end(), alias.families.begin(),
                               alias.families.end());
        found = true;
      }
    }
    for (FeatureFamily f : kAllFamilies) {
      if (FamilyName(f) == item) {
        config.families.push_back(f);
        found = true;
      }
    }
    if (!found) {
      throw ConfigError("unknown feature family \"" + std::string(item) + "\"");
    }
    if (end == spec.size()) break;
  }
  std::sort(config.families.begin(), config.families.end());
  config.families.erase(
      std::unique(config.families.begin(), config.families.end()),
      config.families.end());
  if (config.families.empty()) throw ConfigError("empty feature list");
  return config;
}

std::string FeatureConfigName(const FeatureConfig &config) {
  std::string name;
  for (FeatureFamily f : config.families) {
    if (!name.empty()) name += '+';
    name += FamilyName(f);
  }
  if (config.use_coref) name += "@coref";
  return name;
}

std::vector<std::string> FeatureNames(const FeatureConfig &config,
                                      const FeatureResources &resources) {
  RequireResources(config, resources);
  std::vector<std::string> names;
  for (FeatureFamily f : config.families) {
    const std::string prefix = std::string(FamilyName(f)) + ".";
    switch (f) {
      case FeatureFamily::kReadability:
        for (std::string_view n : kReadabilityNames) names.push_back(prefix + std::string(n));
        break;
      case FeatureFamily::kLiwcCurrent:
      case FeatureFamily::kLiwcPrev:
        for (const std::string &c : resources.categories->categories()) {
          names.push_back(prefix + c);
        }
        names.push_back(prefix + "wps");
        names.push_back(prefix + "sixltr");
        break;
      case FeatureFamily::kSentiment:
        for (std::string_view n : kSentimentNames) names.push_back(prefix + std::string(n));
        break;
      case FeatureFamily::kDacPrev:
        names.push_back(prefix + "question");
        break;
      case FeatureFamily::kTurnPos:
        names.push_back(prefix + "third");
        break;
      case FeatureFamily::kEmbedding:
        for (int i = 0; i < resources.embeddings->dimension(); ++i) {
          names.push_back(prefix + std::to_string(i));
        }
        break;
    }
  }
  return names;
}

FeatureVector AssembleFeatures(const Sentence &sentence, const Dialog &dialog,
                               const FeatureConfig &config,
                               const FeatureResources &resources,
                               bool dialog_is_substituted) {
  if (config.families.empty()) throw ConfigError("no feature family enabled");
  if (!config.use_coref || dialog_is_substituted) {
    return Assemble(sentence, dialog, config, resources);
  }
  const Dialog substituted = CorefReplace(dialog, resources.pronouns,
                                          resources.stopwords, resources.verbs);
  const Sentence *rewritten = substituted.FindSentence(sentence.global_index);
  if (rewritten == nullptr) {
    throw InvalidArgument("sentence " + ToString(sentence.key()) +
                          " is not part of dialog " + dialog.dialog_id);
  }
  return Assemble(*rewritten, substituted, config, resources);
}

std::vector<FeatureVector> ExtractDialogFeatures(
    const Dialog &dialog, const FeatureConfig &config,
    const FeatureResources &resources) {
  if (config.families.empty()) throw ConfigError("no feature family enabled");
  Dialog working = config.use_coref
                       ? CorefReplace(dialog, resources.pronouns,
                                      resources.stopwords, resources.verbs)
                       : dialog;
  std::vector<FeatureVector> out;
  for (const Sentence *s : working.Sentences()) {
    if (s->kept) out.push_back(Assemble(*s, working, config, resources));
  }
  return out;
}

}  // namespace argsum
