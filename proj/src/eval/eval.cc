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

#include "argsum/eval.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "argsum/error.h"
#include "argsum/rng.h"

namespace argsum {
namespace {

std::vector<std::size_t> Balance(std::span<const LabeledItem> items,
                                 const std::vector<std::size_t> &pool,
                                 Rng &rng, std::string_view partition) {
  std::vector<std::size_t> by_class[2];
  for (std::size_t i : pool) {
    const int label = items[i].label;
    if (label != 0 && label != 1) {
      throw InvalidArgument("label " + std::to_string(label) + " is not 0 or 1");
    }
    by_class[label].push_back(i);
  }
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].empty()) {
      throw ValidationError(std::string(partition) + " partition has no sentence of class " +
                            std::to_string(c));
    }
  }
  const std::size_t keep = std::min(by_class[0].size(), by_class[1].size());
  std::vector<std::size_t> out;
  for (auto &members : by_class) {
    rng.Shuffle(std::span<std::size_t>(members));
    out.insert(out.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(keep));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Continued fraction for the incomplete beta function (modified Lentz).
double BetaContinuedFraction(double a, double b, double x) {
  constexpr int kMaxIterations = 300;
  constexpr double kEpsilon = 1e-15;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) break;
  }
  return h;
}

double Median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

BalancedSplit MakeBalancedSplit(std::span<const LabeledItem> items,
                                int test_dialog_count, std::uint64_t seed) {
  if (test_dialog_count < 1) {
    throw InvalidArgument("at least one test dialog is required");
  }
  std::set<std::string> dialog_set;
  for (const LabeledItem &item : items) dialog_set.insert(item.key.dialog_id);
  std::vector<std::string> dialogs(dialog_set.begin(), dialog_set.end());
  if (dialogs.size() <= static_cast<std::size_t>(test_dialog_count)) {
    throw InvalidArgument("cannot hold out " + std::to_string(test_dialog_count) +
                          " of " + std::to_string(dialogs.size()) + " dialogs");
  }
  Rng rng(seed);
  rng.Shuffle(std::span<std::string>(dialogs));
  BalancedSplit split;
  split.test_dialogs.assign(dialogs.begin(), dialogs.begin() + test_dialog_count);
  std::sort(split.test_dialogs.begin(), split.test_dialogs.end());

  std::vector<std::size_t> train_pool, test_pool;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const bool held_out = std::binary_search(split.test_dialogs.begin(),
                                             split.test_dialogs.end(),
                                             items[i].key.dialog_id);
    (held_out ? test_pool : train_pool).push_back(i);
  }
  split.train = Balance(items, train_pool, rng, "training");
  split.test = Balance(items, test_pool, rng, "test");
  return split;
}

EvalReport Prf(std::span<const int> y_true, std::span<const int> y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw InvalidArgument("label vectors differ in length (" +
                          std::to_string(y_true.size()) + " vs " +
                          std::to_string(y_pred.size()) + ")");
  }
  if (y_true.empty()) throw InvalidArgument("empty label vectors");
  int counts[2][2] = {{0, 0}, {0, 0}};  // [true][pred]
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if ((y_true[i] != 0 && y_true[i] != 1) || (y_pred[i] != 0 && y_pred[i] != 1)) {
      throw InvalidArgument("labels must be 0 or 1");
    }
    ++counts[y_true[i]][y_pred[i]];
  }
  EvalReport report;
  double weighted = 0.0;
  for (int c = 0; c < 2; ++c) {
    const int tp = counts[c][c];
    const int predicted = counts[0][c] + counts[1][c];
    const int actual = counts[c][0] + counts[c][1];
    ClassMetrics &m = report.per_class[c];
    m.support = actual;
    m.precision = predicted > 0 ? static_cast<double>(tp) / predicted : 0.0;
    m.recall = actual > 0 ? static_cast<double>(tp) / actual : 0.0;
    m.f1 = m.precision + m.recall > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    weighted += m.f1 * actual;
  }
  report.weighted_f = weighted / static_cast<double>(y_true.size());
  return report;
}

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw InvalidArgument("incomplete beta needs positive shape parameters");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidArgument("incomplete beta argument outside [0, 1]");
  }
  if (x == 0.0 || x == 1.0) return x;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - front * BetaContinuedFraction(b, a, 1.0 - x) / b;
}

double StudentTTwoSidedP(double t, double df) {
  if (!(df > 0.0)) throw InvalidArgument("degrees of freedom must be positive");
  if (std::isnan(t)) throw InvalidArgument("t statistic is NaN");
  if (std::isinf(t)) return 0.0;
  const double p = RegularizedIncompleteBeta(0.5 * df, 0.5, df / (df + t * t));
  return std::clamp(p, 0.0, 1.0);
}

SignificanceResult PairedTTest(std::span<const double> a,
                               std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("paired samples differ in length");
  }
  const std::size_t n = a.size();
  if (n < 2) throw InvalidArgument("paired t-test needs at least two pairs");
  std::vector<double> d(n);
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a[i] - b[i];
    mean += d[i];
  }
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : d) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  SignificanceResult r;
  r.df = static_cast<double>(n - 1);
  r.mean_difference = mean;
  if (sd == 0.0) {
    if (mean == 0.0) {
      r.t = 0.0;
      r.p_value = 1.0;
    } else {
      r.t = std::copysign(std::numeric_limits<double>::infinity(), mean);
      r.p_value = 0.0;
    }
    return r;
  }
  r.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  r.p_value = StudentTTwoSidedP(r.t, r.df);
  return r;
}

double ChiSquare2x2(double a, double b, double c, double d) {
  const double denom = (a + b) * (c + d) * (a + c) * (b + d);
  if (denom == 0.0) return 0.0;
  const double n = a + b + c + d;
  const double cross = a * d - b * c;
  return n * cross * cross / denom;
}

ChiSquareRanking ChiSquareRank(const Matrix &x,
                               std::span<const std::string> names,
                               std::span<const int> labels) {
  if (names.size() != x.cols()) {
    throw InvalidArgument("feature name count does not match column count");
  }
  if (labels.size() != x.rows()) {
    throw InvalidArgument("label count does not match row count");
  }
  if (x.rows() < 2) throw InvalidArgument("chi-square ranking needs two rows");
  ChiSquareRanking ranking;
  for (std::size_t c = 0; c < x.cols(); ++c) {
    std::vector<double> column(x.rows());
    for (std::size_t r = 0; r < x.rows(); ++r) column[r] = x.at(r, c);
    const double median = Median(column);
    double table[2][2] = {{0, 0}, {0, 0}};  // [high][label]
    for (std::size_t r = 0; r < x.rows(); ++r) {
      if (labels[r] != 0 && labels[r] != 1) throw InvalidArgument("labels must be 0 or 1");
      table[column[r] > median ? 1 : 0][labels[r]] += 1.0;
    }
    const double stat = ChiSquare2x2(table[1][1], table[1][0], table[0][1], table[0][0]);
    ranking.entries.emplace_back(names[c], stat);
  }
  std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                   [](const auto &l, const auto &r) { return l.second > r.second; });
  return ranking;
}

}  // namespace argsum
