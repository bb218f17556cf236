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

#include "argsum/model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <json.hpp>

#include "argsum/error.h"
#include "argsum/eval.h"
#include "argsum/rng.h"

namespace argsum {
namespace {

constexpr int kModelFormatVersion = 1;

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void CheckTrainingInput(const Matrix &x, std::span<const int> y) {
  if (x.rows() != y.size()) {
    throw InvalidArgument("feature matrix has " + std::to_string(x.rows()) +
                          " rows but " + std::to_string(y.size()) + " labels");
  }
  bool seen[2] = {false, false};
  for (int label : y) {
    if (label != 0 && label != 1) {
      throw InvalidArgument("label " + std::to_string(label) + " is not 0 or 1");
    }
    seen[label] = true;
  }
  if (!seen[0] || !seen[1]) {
    throw InvalidArgument("training labels contain a single class");
  }
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (double v : x.row(r)) {
      if (!std::isfinite(v)) {
        throw InvalidArgument("non-finite feature value in row " + std::to_string(r));
      }
    }
  }
}

}  // namespace

const std::vector<double> kDefaultLambdaGrid = {1e-4, 1e-3, 1e-2, 1e-1, 1.0};

Matrix Matrix::FromRows(const std::vector<std::vector<double>> &rows) {
  Matrix m;
  for (const auto &r : rows) m.AppendRow(r);
  return m;
}

void Matrix::AppendRow(std::span<const double> values) {
  if (rows_ == 0 && data_.empty()) {
    cols_ = values.size();
  } else if (values.size() != cols_) {
    throw InvalidArgument("row of length " + std::to_string(values.size()) +
                          " appended to a matrix with " +
                          std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::SelectRows(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw InvalidArgument("row index out of range");
    std::copy_n(row(indices[i]).begin(), cols_, out.row(i).begin());
  }
  return out;
}

Matrix Matrix::SelectColumns(std::span<const std::size_t> indices) const {
  Matrix out(rows_, indices.size());
  for (std::size_t c : indices) {
    if (c >= cols_) throw InvalidArgument("column index out of range");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < indices.size(); ++j) out.at(r, j) = at(r, indices[j]);
  }
  return out;
}

std::vector<double> Scaler::Transform(std::span<const double> row) const {
  if (row.size() != means.size()) {
    throw InvalidArgument("expected " + std::to_string(means.size()) +
                          " features, got " + std::to_string(row.size()));
  }
  std::vector<double> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = (row[i] - means[i]) / stds[i];
  return out;
}

Matrix Scaler::Transform(const Matrix &x) const {
  Matrix out(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    const std::vector<double> t = Transform(x.row(r));
    std::copy(t.begin(), t.end(), out.row(r).begin());
  }
  return out;
}

Scaler FitScaler(const Matrix &x) {
  if (x.rows() < 2) throw InvalidArgument("scaler needs at least two rows");
  Scaler s;
  s.means.assign(x.cols(), 0.0);
  s.stds.assign(x.cols(), 0.0);
  const double n = static_cast<double>(x.rows());
  for (std::size_t c = 0; c < x.cols(); ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r) mean += x.at(r, c);
    mean /= n;
    double var = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r) {
      const double d = x.at(r, c) - mean;
      var += d * d;
    }
    const double sd = std::sqrt(var / n);
    s.means[c] = mean;
    s.stds[c] = sd > 0.0 ? sd : 1.0;
  }
  return s;
}

double HingeObjective(const LinearModel &model, const Matrix &scaled_x,
                      std::span<const int> y) {
  double loss = 0.0;
  for (std::size_t r = 0; r < scaled_x.rows(); ++r) {
    const double sign = y[r] == 1 ? 1.0 : -1.0;
    loss += std::max(0.0, 1.0 - sign * (Dot(model.weights, scaled_x.row(r)) + model.bias));
  }
  if (scaled_x.rows() > 0) loss /= static_cast<double>(scaled_x.rows());
  return 0.5 * model.lambda * Dot(model.weights, model.weights) + loss;
}

LinearModel TrainSvm(const Matrix &x, std::span<const int> y, double lambda,
                     int epochs, std::uint64_t seed,
                     std::vector<std::string> feature_names,
                     TrainTrace *trace) {
  CheckTrainingInput(x, y);
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("lambda must be positive");
  }
  if (epochs < 1) throw InvalidArgument("epochs must be at least 1");
  if (!feature_names.empty() && feature_names.size() != x.cols()) {
    throw InvalidArgument("feature name count does not match column count");
  }

  LinearModel model;
  model.lambda = lambda;
  model.epochs = epochs;
  model.seed = seed;
  model.scaler = FitScaler(x);
  model.feature_names = std::move(feature_names);
  model.weights.assign(x.cols(), 0.0);

  const Matrix scaled = model.scaler.Transform(x);
  std::vector<std::size_t> order(x.rows());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  std::vector<double> &w = model.weights;
  std::uint64_t t = 0;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    rng.Shuffle(std::span<std::size_t>(order));
    for (std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (lambda * static_cast<double>(t));
      const double sign = y[i] == 1 ? 1.0 : -1.0;
      const std::span<const double> xi = scaled.row(i);
      const double margin = sign * (Dot(w, xi) + model.bias);
      const double shrink = 1.0 - eta * lambda;
      for (double &wj : w) wj *= shrink;
      if (margin < 1.0) {
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += eta * sign * xi[j];
        model.bias += eta * sign;
      }
    }
    if (trace != nullptr) {
      trace->epoch_objective.push_back(HingeObjective(model, scaled, y));
    }
  }
  return model;
}

Prediction PredictRow(const LinearModel &model, std::span<const double> row) {
  if (row.size() != model.weights.size()) {
    throw InvalidArgument("expected " + std::to_string(model.weights.size()) +
                          " features, got " + std::to_string(row.size()));
  }
  const std::vector<double> scaled = model.scaler.Transform(row);
  const double margin = Dot(model.weights, scaled) + model.bias;
  return {margin >= 0.0 ? 1 : 0, margin};
}

Prediction Predict(const LinearModel &model, const FeatureVector &x) {
  if (x.names != model.feature_names) {
    throw InvalidArgument("feature names of " + ToString(x.key) +
                          " do not match the model");
  }
  if (x.values.size() != x.names.size()) {
    throw InvalidArgument("feature vector has mismatched names and values");
  }
  return PredictRow(model, x.values);
}

std::vector<int> PredictLabels(const LinearModel &model, const Matrix &x) {
  std::vector<int> labels;
  labels.reserve(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    labels.push_back(PredictRow(model, x.row(r)).label);
  }
  return labels;
}

std::vector<int> StratifiedFolds(std::span<const int> y, int k,
                                 std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("need at least two folds");
  std::vector<int> folds(y.size(), 0);
  Rng rng(seed);
  std::size_t next = 0;
  for (int label : {0, 1}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == label) members.push_back(i);
    }
    rng.Shuffle(std::span<std::size_t>(members));
    for (std::size_t i : members) {
      folds[i] = static_cast<int>(next % static_cast<std::size_t>(k));
      ++next;
    }
  }
  return folds;
}

const std::vector<double> &CrossValidationResult::best_fold_f() const {
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i] == best_lambda) return fold_f[i];
  }
  throw InvalidArgument("cross-validation result has no entry for its best lambda");
}

CrossValidationResult CrossValidate(const Matrix &x, std::span<const int> y,
                                    std::span<const double> lambda_grid, int k,
                                    std::uint64_t seed, int epochs) {
  CheckTrainingInput(x, y);
  if (lambda_grid.empty()) throw InvalidArgument("empty lambda grid");
  if (k < 2) throw InvalidArgument("need at least two folds");
  const auto positives = static_cast<int>(std::count(y.begin(), y.end(), 1));
  const int smallest = std::min(positives, static_cast<int>(y.size()) - positives);
  if (smallest < 2) {
    throw InvalidArgument("cross-validation needs two rows of each class");
  }
  k = std::min(k, smallest);

  std::vector<double> grid(lambda_grid.begin(), lambda_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const std::vector<int> folds = StratifiedFolds(y, k, DeriveSeed(seed, "folds"));
  CrossValidationResult result;
  result.lambdas = grid;
  for (double lambda : grid) {
    std::vector<double> scores;
    for (int f = 0; f < k; ++f) {
      std::vector<std::size_t> train, test;
      for (std::size_t i = 0; i < y.size(); ++i) {
        (folds[i] == f ? test : train).push_back(i);
      }
      std::vector<int> y_train, y_test;
      for (std::size_t i : train) y_train.push_back(y[i]);
      for (std::size_t i : test) y_test.push_back(y[i]);
      const LinearModel model =
          TrainSvm(x.SelectRows(train), y_train, lambda, epochs,
                   DeriveSeed(seed, "fold" + std::to_string(f)));
      scores.push_back(Prf(y_test, PredictLabels(model, x.SelectRows(test))).weighted_f);
    }
    const double mean =
        std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(k);
    result.fold_f.push_back(std::move(scores));
    result.mean_f.push_back(mean);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (result.mean_f[i] > result.mean_f[best]) best = i;
  }
  result.best_lambda = grid[best];
  return result;
}

void SaveModel(std::ostream &out, const LinearModel &model) {
  nlohmann::json j;
  j["format"] = "argsum-linear-svm";
  j["version"] = kModelFormatVersion;
  j["feature_names"] = model.feature_names;
  j["weights"] = model.weights;
  j["bias"] = model.bias;
  j["lambda"] = model.lambda;
  j["epochs"] = model.epochs;
  j["seed"] = model.seed;
  j["scaler"] = {{"means", model.scaler.means}, {"stds", model.scaler.stds}};
  out << j.dump(2) << '\n';
  if (!out) throw ResourceError("failed to write model");
}

LinearModel LoadModel(std::istream &in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(0, std::string("model file: ") + e.what());
  }
  LinearModel m;
  try {
    if (j.at("format").get<std::string>() != "argsum-linear-svm") {
      throw ParseError(0, "model file: unknown format");
    }
    if (j.at("version").get<int>() != kModelFormatVersion) {
      throw ParseError(0, "model file: unsupported version " +
                              std::to_string(j.at("version").get<int>()));
    }
    m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    m.weights = j.at("weights").get<std::vector<double>>();
    m.bias = j.at("bias").get<double>();
    m.lambda = j.at("lambda").get<double>();
    m.epochs = j.at("epochs").get<int>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.scaler.means = j.at("scaler").at("means").get<std::vector<double>>();
    m.scaler.stds = j.at("scaler").at("stds").get<std::vector<double>>();
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(0, std::string("model file: ") + e.what());
  }
  const std::size_t d = m.weights.size();
  if (m.feature_names.size() != d || m.scaler.means.size() != d ||
      m.scaler.stds.size() != d) {
    throw ValidationError("model file: inconsistent vector lengths");
  }
  for (double s : m.scaler.stds) {
    if (!(s > 0.0)) throw ValidationError("model file: non-positive scaler std");
  }
  return m;
}

}  // namespace argsum
