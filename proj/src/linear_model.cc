// Copyright 2026 The Slotfill Authors.
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

#include "slotfill/linear_model.h"

#include <cmath>
#include <map>
#include <numeric>

#include "slotfill/tensor.h"

namespace slotfill {

std::string LengthBucket(size_t middle_length) {
  if (middle_length <= 2) return std::to_string(middle_length);
  return middle_length <= 5 ? "3-5" : "6+";
}

std::vector<std::string> FeatureNames(const RelationContext &context) {
  std::vector<std::string> names;
  for (const std::string &w : context.left) names.push_back("L:" + ToLower(w));
  for (const std::string &w : context.middle) names.push_back("M:" + ToLower(w));
  for (const std::string &w : context.right) names.push_back("R:" + ToLower(w));
  for (size_t i = 0; i + 1 < context.middle.size(); ++i) {
    names.push_back("MB:" + ToLower(context.middle[i]) + " " + ToLower(context.middle[i + 1]));
  }
  names.emplace_back(context.entity_first ? "ORDER:entity_first" : "ORDER:filler_first");
  names.push_back("MLEN:" + LengthBucket(context.middle.size()));
  return names;
}

SparseVector Featurize(const RelationContext &context, int bits) {
  const uint64_t mask = (uint64_t{1} << bits) - 1;
  std::map<uint32_t, double> counts;
  for (const std::string &name : FeatureNames(context)) {
    counts[static_cast<uint32_t>(Fnv1a(name) & mask)] += 1.0;
  }
  return SparseVector(counts.begin(), counts.end());
}

double Logistic(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

LinearModel::LinearModel(int bits) : bits_(bits) {
  if (bits < 1 || bits > 28) throw Error("hash bits out of range: " + std::to_string(bits));
  weights_.assign(size_t{1} << bits, 0.0);
}

double LinearModel::Margin(const SparseVector &x) const {
  double m = bias_;
  for (const auto &[i, v] : x) m += weights_[i] * v;
  return m;
}

double LinearModel::Margin(const RelationContext &context) const {
  return Margin(Featurize(context, bits_));
}

double LinearModel::Score(const RelationContext &context) const { return Logistic(Margin(context)); }

nlohmann::json LinearModel::ToJson() const {
  nlohmann::json nonzero = nlohmann::json::array();
  for (size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] != 0.0) nonzero.push_back({i, weights_[i]});
  }
  return {{"model", "svm"}, {"bits", bits_}, {"bias", bias_}, {"weights", nonzero}};
}

LinearModel LinearModel::FromJson(const nlohmann::json &j) {
  if (j.value("model", "") != "svm") throw Error("not a linear model file");
  LinearModel model(j.at("bits").get<int>());
  model.bias_ = j.at("bias").get<double>();
  for (const auto &entry : j.at("weights")) {
    size_t i = entry.at(0).get<size_t>();
    if (i >= model.weights_.size()) throw Error("weight index out of range");
    model.weights_[i] = entry.at(1).get<double>();
  }
  return model;
}

void LinearModel::Save(const std::string &path) const { WriteFile(path, ToJson().dump() + "\n"); }

LinearModel LinearModel::Load(const std::string &path) {
  try {
    return FromJson(nlohmann::json::parse(ReadFile(path)));
  } catch (const nlohmann::json::exception &e) {
    throw Error(path + ": " + e.what());
  }
}

LinearModel SvmTrain(const std::vector<std::pair<RelationContext, int>> &data, const SvmConfig &config) {
  if (data.empty()) throw Error("cannot train a linear model on an empty dataset");
  std::vector<SparseVector> xs;
  std::vector<double> ys;
  for (const auto &[context, label] : data) {
    if (label != 0 && label != 1) throw Error("labels must be 0 or 1");
    xs.push_back(Featurize(context, config.bits));
    ys.push_back(label == 1 ? 1.0 : -1.0);
  }
  LinearModel model(config.bits);
  std::vector<double> &w = model.weights();
  // w = scale * v keeps the L2 shrink O(1) per step.
  std::vector<double> v(w.size(), 0.0);
  double scale = 1.0;
  double bias = 0.0;
  const double eta = config.learning_rate;
  const double shrink = 1.0 - eta * config.l2;
  Rng rng(config.seed);
  std::vector<size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.Shuffle(&order);
    for (size_t idx : order) {
      const SparseVector &x = xs[idx];
      double margin = bias;
      for (const auto &[i, value] : x) margin += scale * v[i] * value;
      scale *= shrink;
      if (ys[idx] * margin < config.margin) {
        for (const auto &[i, value] : x) v[i] += eta * ys[idx] * value / scale;
        bias += eta * ys[idx];
      }
      if (scale < 1e-9) {
        for (double &vi : v) vi *= scale;
        scale = 1.0;
      }
    }
  }
  for (size_t i = 0; i < w.size(); ++i) w[i] = scale * v[i];
  model.bias() = bias;
  return model;
}

}  // namespace slotfill
