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

#ifndef ARGSUM_PYRAMID_H_
#define ARGSUM_PYRAMID_H_

// Gold importance labels from pyramid annotations.
//
// Pyramid file (JSON Lines):
//   {"scu_id": "d1.s3", "label_text": "...", "contributors": ["A", "C"]}
// Annotation file (JSON Lines, one record per annotator and sentence):
//   {"dialog_id": "d1", "turn_index": 0, "index_in_turn": 2,
//    "annotator": "a1", "scu_ids": ["d1.s3"]}
// An empty scu_ids list means "none of the labels match".

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "argsum/corpus.h"

namespace argsum {

// Number of human summaries behind each pyramid.
inline constexpr int kSummariesPerDialog = 5;
inline constexpr double kImportanceThreshold = 3.0;

// Binary label vector, values 0 or 1.
using Labels = std::vector<int>;

struct ScuLabel {
  std::string scu_id;
  std::string label_text;
  std::set<std::string> contributor_summary_ids;
  int tier = 0;

  bool operator==(const ScuLabel &) const = default;
};

using Pyramid = std::map<std::string, ScuLabel>;

struct SentenceAnnotation {
  SentenceKey key;
  // annotator -> assigned scu ids
  std::map<std::string, std::set<std::string>> assignments;
};

struct GoldLabel {
  SentenceKey key;
  double avg_tier = 0.0;
  bool important = false;

  bool operator==(const GoldLabel &) const = default;
};

enum class TierAveraging {
  kPooled,        // mean over all (annotator, scu) pairs
  kPerAnnotator,  // mean of per-annotator means; "none" counts as 0
};

// Number of distinct contributing summaries. Throws InvalidArgument when
// the list is empty.
int TierOfScu(std::span<const std::string> contributors);

// Builds a label, checking 1 <= tier <= max_summaries.
ScuLabel MakeScu(std::string scu_id, std::string label_text,
                 std::span<const std::string> contributors,
                 int max_summaries = kSummariesPerDialog);

// Average tier of the SCUs assigned to a sentence; 0 when nothing was
// assigned. Throws ValidationError naming any unknown scu id.
double AggregateSentenceScore(const SentenceAnnotation &annotation,
                              const Pyramid &pyramid,
                              TierAveraging averaging = TierAveraging::kPooled);

inline bool GoldImportance(double avg_tier,
                           double threshold = kImportanceThreshold) {
  return avg_tier >= threshold;
}

// Cohen's kappa of two aligned binary vectors. When chance agreement is 1
// the result is 1 for identical vectors and 0 otherwise.
double CohenKappa(std::span<const int> a, std::span<const int> b);

// Mean kappa over all unordered annotator pairs.
double AveragePairwiseKappa(const std::map<std::string, Labels> &annotators);

Pyramid ParsePyramid(std::istream &in,
                     int max_summaries = kSummariesPerDialog);
std::vector<SentenceAnnotation> ParseAnnotations(std::istream &in);

struct GoldOptions {
  double threshold = kImportanceThreshold;
  TierAveraging averaging = TierAveraging::kPooled;
};

// One label per segmented sentence of the corpus, in dialog order.
// Annotations for sentences absent from the corpus are a ValidationError.
std::vector<GoldLabel> ComputeGoldLabels(
    const Corpus &corpus, const Pyramid &pyramid,
    std::span<const SentenceAnnotation> annotations,
    const GoldOptions &options = {});

void WriteGoldLabels(std::ostream &out, std::span<const GoldLabel> labels);
std::vector<GoldLabel> ParseGoldLabels(std::istream &in);

struct PairAgreement {
  std::string annotator_a;
  std::string annotator_b;
  double kappa = 0.0;
  int sentences = 0;
};

struct AgreementReport {
  std::vector<PairAgreement> pairs;
  double mean_kappa = 0.0;
};

// Kappa over per-annotator binary importance (each annotator's own average
// tier against the threshold), on the sentences both annotators labeled.
AgreementReport ComputeAgreement(
    const Pyramid &pyramid, std::span<const SentenceAnnotation> annotations,
    const GoldOptions &options = {});

}  // namespace argsum

#endif  // ARGSUM_PYRAMID_H_
