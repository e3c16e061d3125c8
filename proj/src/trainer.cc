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

#include "slotfill/trainer.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace slotfill {

TrainReport Train(RelationClassifier *model, const std::vector<LabeledContext> &data,
                  const TrainConfig &config) {
  if (data.empty()) throw Error("training set is empty");
  if (config.batch_size < 1 || config.epochs < 0) throw Error("bad training configuration");
  for (const LabeledContext &ex : data) {
    if (ex.label != 0 && ex.label != 1) throw Error("labels must be 0 or 1");
  }
  TrainReport report;
  Rng rng(config.seed);
  std::vector<size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  ParamSet &params = model->params();

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.Shuffle(&order);
    double total = 0.0;
    for (size_t start = 0; start < order.size(); start += config.batch_size) {
      const size_t end = std::min(order.size(), start + config.batch_size);
      const double scale = 1.0 / static_cast<double>(end - start);
      params.ZeroGrad();
      for (size_t i = start; i < end; ++i) {
        const LabeledContext &ex = data[order[i]];
        double loss = model->Accumulate(ex.context, ex.label, scale);
        if (!std::isfinite(loss)) {
          throw Error("non-finite loss at epoch " + std::to_string(epoch) + ", example " +
                      std::to_string(order[i]));
        }
        total += loss;
      }
      for (Param &p : params.params()) {
        if (p.regularized) p.grad += config.l2 * p.value;
      }
      double norm = params.GradNorm();
      if (config.clip_norm > 0.0 && norm > config.clip_norm) params.ScaleGrad(config.clip_norm / norm);
      if (config.learning_rate != 0.0) {
        for (Param &p : params.params()) p.value -= config.learning_rate * p.grad;
      }
    }
    report.epoch_loss.push_back(total / static_cast<double>(data.size()));
  }
  if (!params.AllFinite()) throw Error("training produced non-finite parameters");
  report.train_accuracy = Accuracy(*model, data);
  return report;
}

double Accuracy(const RelationClassifier &model, const std::vector<LabeledContext> &data) {
  if (data.empty()) return 0.0;
  size_t correct = 0;
  for (const LabeledContext &ex : data) {
    int predicted = model.Predict(ex.context) >= 0.5 ? 1 : 0;
    if (predicted == ex.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(data.size());
}

double GradientCheck(RelationClassifier *model, const RelationContext &context, int label,
                     double epsilon) {
  ParamSet &params = model->params();
  params.ZeroGrad();
  model->Accumulate(context, label, 1.0);
  double worst = 0.0;
  for (Param &p : params.params()) {
    for (Eigen::Index i = 0; i < p.value.size(); ++i) {
      double &w = p.value.data()[i];
      const double saved = w;
      w = saved + epsilon;
      const double plus = model->Loss(context, label);
      w = saved - epsilon;
      const double minus = model->Loss(context, label);
      w = saved;
      const double numeric = (plus - minus) / (2.0 * epsilon);
      const double analytic = p.grad.data()[i];
      const double denom = std::max({std::abs(analytic), std::abs(numeric), 1e-8});
      worst = std::max(worst, std::abs(analytic - numeric) / denom);
    }
  }
  params.ZeroGrad();
  return worst;
}

}  // namespace slotfill
