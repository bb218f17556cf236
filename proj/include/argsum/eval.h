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

#ifndef ARGSUM_EVAL_H_
#define ARGSUM_EVAL_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "argsum/corpus.h"
#include "argsum/model.h"

namespace argsum {

struct LabeledItem {
  SentenceKey key;
  int label = 0;
};

struct BalancedSplit {
  std::vector<std::string> test_dialogs;  // sorted
  std::vector<std::size_t> train;         // indices into the input, ascending
  std::vector<std::size_t> test;
};

inline constexpr int kDefaultTestDialogs = 13;

// Holds out `test_dialog_count` whole dialogs, then downsamples the
// majority class within train and within test to the minority count.
// Throws InvalidArgument if there are not more dialogs than held out, and
// ValidationError if a partition lacks a class.
BalancedSplit MakeBalancedSplit(std::span<const LabeledItem> items,
                                int test_dialog_count, std::uint64_t seed);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int support = 0;
};

struct EvalReport {
  std::array<ClassMetrics, 2> per_class;  // index = class label
  double weighted_f = 0.0;
  std::string config;
};

// Per-class precision, recall and F1 (0/0 taken as 0); F1 averaged with
// weights equal to the true class supports.
EvalReport Prf(std::span<const int> y_true, std::span<const int> y_pred);

struct SignificanceResult {
  double t = 0.0;
  double df = 0.0;
  double p_value = 1.0;
  double mean_difference = 0.0;
};

// Regularized incomplete beta I_x(a, b), by continued fraction.
double RegularizedIncompleteBeta(double a, double b, double x);

// Two-sided tail probability of Student's t with `df` degrees of freedom.
double StudentTTwoSidedP(double t, double df);

// Paired t-test on a - b.
SignificanceResult PairedTTest(std::span<const double> a,
                               std::span<const double> b);

struct ChiSquareRanking {
  std::vector<std::pair<std::string, double>> entries;  // descending
};

// Chi-square of each median-split feature against the labels. Constant
// features score 0; ties keep column order.
ChiSquareRanking ChiSquareRank(const Matrix &x,
                               std::span<const std::string> names,
                               std::span<const int> labels);

// Statistic of one 2x2 table [[a, b], [c, d]]; 0 if a margin is empty.
double ChiSquare2x2(double a, double b, double c, double d);

}  // namespace argsum

#endif  // ARGSUM_EVAL_H_
