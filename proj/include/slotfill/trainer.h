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

#ifndef SLOTFILL_TRAINER_H_
#define SLOTFILL_TRAINER_H_

#include <cstdint>
#include <vector>

#include "slotfill/embeddings.h"

namespace slotfill {

struct TrainConfig {
  double learning_rate = 0.05;
  int epochs = 50;
  int batch_size = 16;
  uint64_t seed = 1;
  // Global gradient-norm clip; <= 0 disables clipping.
  double clip_norm = 5.0;
  double l2 = 1e-4;
};

struct LabeledContext {
  RelationContext context;
  int label = 0;
};

struct TrainReport {
  // Mean data loss per epoch.
  std::vector<double> epoch_loss;
  double train_accuracy = 0.0;
};

// Mini-batch SGD on cross-entropy plus L2 on weight matrices, with global
// gradient-norm clipping. Deterministic for a given seed. Throws Error on an
// empty dataset, a label outside {0,1}, or a non-finite loss.
TrainReport Train(RelationClassifier *model, const std::vector<LabeledContext> &data,
                  const TrainConfig &config);

// Fraction of examples whose thresholded prediction (>= 0.5) equals the label.
double Accuracy(const RelationClassifier &model, const std::vector<LabeledContext> &data);

// Maximum relative error between analytic gradients and central finite
// differences over every parameter entry:
//   |g_a - g_n| / max(|g_a|, |g_n|, 1e-8)
double GradientCheck(RelationClassifier *model, const RelationContext &context, int label,
                     double epsilon = 1e-5);

}  // namespace slotfill

#endif  // SLOTFILL_TRAINER_H_
