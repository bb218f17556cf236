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

#ifndef ARGSUM_EXPERIMENT_H_
#define ARGSUM_EXPERIMENT_H_

// End-to-end experiment wiring: corpus + pyramid annotations -> gold
// labels -> baselines / features -> classifier -> reports.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argsum/baselines.h"
#include "argsum/corpus.h"
#include "argsum/eval.h"
#include "argsum/features.h"
#include "argsum/model.h"
#include "argsum/pyramid.h"

namespace argsum {

struct TextLexicons {
  WordSet abbreviations;
  WordSet dictionary;
  WordSet verbs;

  static TextLexicons Bundled();
};

// One topic, segmented and filtered, with gold labels.
struct TopicData {
  Corpus corpus;
  std::map<SentenceKey, GoldLabel> gold;
  // Kept sentences in corpus order with their gold label.
  std::vector<LabeledItem> items;
};

TopicData PrepareTopic(Corpus corpus, const Pyramid &pyramid,
                       std::span<const SentenceAnnotation> annotations,
                       const TextLexicons &lexicons,
                       const GoldOptions &gold_options = {});

// Feature rows for every item of the topic, aligned with topic.items.
struct FeatureTable {
  std::vector<std::string> names;
  Matrix x;
};

FeatureTable FeaturizeTopic(const TopicData &topic,
                            const FeatureConfig &config,
                            const FeatureResources &resources);

// Per-dialog selections with n = gold important kept sentences; labels are
// aligned with topic.items.
struct BaselineRun {
  std::vector<std::string> dialog_ids;
  std::vector<SummarySelection> selections;
  Labels predicted;
};

BaselineRun RunBaseline(const TopicData &topic, SummaryMethod method,
                        const LexRankConfig &config, const WordSet &stopwords);

struct ExperimentOptions {
  std::uint64_t seed = 2017;
  int test_dialogs = kDefaultTestDialogs;
  std::vector<double> lambda_grid = kDefaultLambdaGrid;
  int folds = 5;
  int epochs = kDefaultEpochs;
  LexRankConfig lexrank;
  int jobs = 1;
};

// The held-out/balanced split shared by every configuration of a topic.
BalancedSplit TopicSplit(const TopicData &topic,
                         const ExperimentOptions &options);

struct TrainedTopicModel {
  LinearModel model;
  CrossValidationResult cv;
  BalancedSplit split;
};

// Cross-validates lambda on the balanced training partition, then refits
// on all of it.
TrainedTopicModel TrainTopicModel(const TopicData &topic,
                                  const FeatureConfig &config,
                                  const FeatureResources &resources,
                                  const ExperimentOptions &options);

// Scores a model on the topic's balanced test partition.
EvalReport EvaluateTopicModel(const TopicData &topic, const LinearModel &model,
                              const FeatureConfig &config,
                              const FeatureResources &resources,
                              const ExperimentOptions &options);

enum class ClassifierKind {
  kBaseline,
  kSvm,
  kShuffledLabelSvm,  // control: SVM trained on permuted labels
};

struct AblationConfig {
  std::string id;    // row id, e.g. "1C", "5", "CTL"
  std::string name;  // e.g. "LR", "LCP+R"
  ClassifierKind classifier = ClassifierKind::kSvm;
  SummaryMethod method = SummaryMethod::kLexRank;
  FeatureConfig features;
};

// Comma-separated rows; '+' joins families inside a row. Baselines are
// "kl", "sb", "lr"; "random" is the shuffled-label control on LC
// features. Throws ConfigError.
std::vector<AblationConfig> ParseAblationConfigs(std::string_view list);

enum class CorefMode { kOff, kOn, kBoth };
CorefMode ParseCorefMode(std::string_view text);

struct AblationCell {
  std::string topic;
  bool coref = false;
  EvalReport report;
  double lambda = 0.0;
  std::vector<std::string> dialogs;  // test dialogs, sorted
  std::vector<double> dialog_f;      // weighted F per test dialog
};

struct AblationRow {
  AblationConfig config;
  std::vector<AblationCell> cells;

  const AblationCell *Find(std::string_view topic, bool coref) const;
};

struct AblationTable {
  std::vector<std::string> topics;
  std::vector<AblationRow> rows;
  CorefMode coref = CorefMode::kBoth;
};

// Evaluates one configuration on one topic.
AblationCell RunAblationCell(const TopicData &topic,
                             const AblationConfig &config, bool coref,
                             const FeatureResources &resources,
                             const ExperimentOptions &options);

// All configs x topics x coref settings. Cells are independent and run on
// `options.jobs` threads; results do not depend on the thread count.
AblationTable RunAblation(std::span<const TopicData> topics,
                          std::span<const AblationConfig> configs,
                          CorefMode coref, const FeatureResources &resources,
                          const ExperimentOptions &options);

struct CorefComparison {
  std::string row_id;
  std::string topic;
  SignificanceResult result;  // coref minus plain, paired by dialog
};

std::vector<CorefComparison> CompareCoref(const AblationTable &table);

void WriteAblationText(std::ostream &out, const AblationTable &table);
// One JSON record per cell.
void WriteAblationJsonl(std::ostream &out, const AblationTable &table);

struct TopicChiSquare {
  std::string topic;
  ChiSquareRanking ranking;
};

// Ranks the current-sentence category features on the balanced training
// partition of the topic.
TopicChiSquare AnalyzeTopic(const TopicData &topic,
                            const FeatureResources &resources,
                            const ExperimentOptions &options,
                            bool use_coref = false);

void WriteChiSquareText(std::ostream &out,
                        std::span<const TopicChiSquare> topics, int top_k);

}  // namespace argsum

#endif  // ARGSUM_EXPERIMENT_H_
