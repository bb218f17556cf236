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

#ifndef ARGSUM_MODEL_H_
#define ARGSUM_MODEL_H_

// Linear max-margin classifier: hinge loss with L2 regularization, trained
// by stochastic subgradient descent on z-scored features.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "argsum/features.h"

namespace argsum {

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix FromRows(const std::vector<std::vector<double>> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void AppendRow(std::span<const double> values);
  Matrix SelectRows(std::span<const std::size_t> indices) const;
  Matrix SelectColumns(std::span<const std::size_t> indices) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct Scaler {
  std::vector<double> means;
  std::vector<double> stds;  // > 0

  std::vector<double> Transform(std::span<const double> row) const;
  Matrix Transform(const Matrix &x) const;

  bool operator==(const Scaler &) const = default;
};

// Population mean and standard deviation per column; zero-variance
// columns get std 1. Throws InvalidArgument with fewer than two rows.
Scaler FitScaler(const Matrix &x);

struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  double lambda = 0.0;
  int epochs = 0;
  std::uint64_t seed = 0;
  Scaler scaler;
  std::vector<std::string> feature_names;

  bool operator==(const LinearModel &) const = default;
};

inline constexpr int kDefaultEpochs = 50;
extern const std::vector<double> kDefaultLambdaGrid;

struct TrainTrace {
  // Regularized hinge objective on the scaled training set after each
  // epoch.
  std::vector<double> epoch_objective;
};

// Fits the scaler on `x`, then minimizes
//   lambda/2 |w|^2 + 1/N sum max(0, 1 - y (w.x + b))
// with step 1/(lambda t), visiting examples in a seeded shuffled order
// each epoch. The bias is not regularized. Labels are 0/1. Throws
// InvalidArgument on a single class or non-finite input.
LinearModel TrainSvm(const Matrix &x, std::span<const int> y, double lambda,
                     int epochs, std::uint64_t seed,
                     std::vector<std::string> feature_names = {},
                     TrainTrace *trace = nullptr);

double HingeObjective(const LinearModel &model, const Matrix &scaled_x,
                      std::span<const int> y);

struct Prediction {
  int label = 0;
  double margin = 0.0;
};

// Margin on raw (unscaled) features; label 1 iff margin >= 0.
Prediction PredictRow(const LinearModel &model, std::span<const double> row);

// Throws InvalidArgument unless the vector's names equal the model's.
Prediction Predict(const LinearModel &model, const FeatureVector &x);

std::vector<int> PredictLabels(const LinearModel &model, const Matrix &x);

// Fold id for every row: stratified by class, sizes differ by at most one.
std::vector<int> StratifiedFolds(std::span<const int> y, int k,
                                 std::uint64_t seed);

struct CrossValidationResult {
  double best_lambda = 0.0;
  std::vector<double> lambdas;
  std::vector<std::vector<double>> fold_f;  // [lambda][fold]
  std::vector<double> mean_f;               // [lambda]

  const std::vector<double> &best_fold_f() const;
};

// Stratified k-fold search; the best lambda maximizes mean weighted F,
// ties going to the smaller lambda. Throws InvalidArgument if a class has
// fewer than two rows, the grid is empty or k < 2.
CrossValidationResult CrossValidate(const Matrix &x, std::span<const int> y,
                                    std::span<const double> lambda_grid,
                                    int k, std::uint64_t seed,
                                    int epochs = kDefaultEpochs);

// Model files are a single JSON object tagged with a format version.
void SaveModel(std::ostream &out, const LinearModel &model);
LinearModel LoadModel(std::istream &in);

}  // namespace argsum

#endif  // ARGSUM_MODEL_H_
