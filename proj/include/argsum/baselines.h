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

#ifndef ARGSUM_BASELINES_H_
#define ARGSUM_BASELINES_H_

// Extractive summarizers used as importance baselines. Each selects n of
// a dialog's kept sentences; the top-n selection is then read as a binary
// importance labeling, with n set to the dialog's gold important count.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argsum/corpus.h"
#include "argsum/pyramid.h"
#include "argsum/resources.h"

namespace argsum {

enum class SummaryMethod { kSumBasic, kKlSum, kLexRank };

std::string_view MethodName(SummaryMethod method);
// Accepts "sumbasic", "klsum", "lexrank". Throws ConfigError otherwise.
SummaryMethod ParseMethod(std::string_view name);

struct SummarySelection {
  SummaryMethod method = SummaryMethod::kSumBasic;
  std::vector<int> selected;      // global indices, in pick order
  std::map<int, double> scores;   // global index -> method score
  int budget_n = 0;
  bool converged = true;          // false if LexRank hit max_iter

  bool operator==(const SummarySelection &) const = default;
};

struct LexRankConfig {
  double sim_threshold = 0.1;
  double damping = 0.15;
  // Iteration stops when the largest step and the error bound
  // (1 - damping) / damping * |step|_1 are both below tol.
  double tol = 1e-6;
  int max_iter = 100;
};

inline constexpr double kKlSmoothing = 0.001;

// Greedy frequency selector. Sentence weight is the mean probability of
// its content words; after each pick, the probabilities of the picked
// sentence's words are squared. Scores hold the initial weights.
SummarySelection SumBasic(std::span<const Sentence> sentences, int n,
                          const WordSet &stopwords = resources::Stopwords());

// Greedy KL(P_doc || P_summary) minimizer with additive smoothing of the
// summary distribution. Scores hold the KL value at which each sentence
// was added.
SummarySelection KlSum(std::span<const Sentence> sentences, int n,
                       const WordSet &stopwords = resources::Stopwords());

// KL(P_doc || P_summary) for the summary made of `summary`; exposed for
// oracles and diagnostics.
double SummaryKlDivergence(std::span<const Sentence> document,
                           std::span<const Sentence> summary,
                           const WordSet &stopwords = resources::Stopwords(),
                           double alpha = kKlSmoothing);

// Continuous LexRank on the tf-idf cosine graph. Scores are the
// stationary distribution (non-negative, sum 1).
SummarySelection LexRank(std::span<const Sentence> sentences, int n,
                         const LexRankConfig &config = {},
                         const WordSet &stopwords = resources::Stopwords());

// Row-stochastic transition matrix (before damping) that LexRank
// iterates, row-major N x N.
std::vector<double> LexRankTransitionMatrix(
    std::span<const Sentence> sentences, double sim_threshold,
    const WordSet &stopwords = resources::Stopwords());

SummarySelection RunSummarizer(SummaryMethod method,
                               std::span<const Sentence> sentences, int n,
                               const LexRankConfig &config = {},
                               const WordSet &stopwords = resources::Stopwords());

// 1 for selected sentences, aligned with `all_kept`. Throws InvalidArgument
// if the selection names a sentence that is not in the list.
Labels BaselineAsLabels(const SummarySelection &selection,
                        std::span<const Sentence> all_kept);

}  // namespace argsum

#endif  // ARGSUM_BASELINES_H_
