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

#ifndef SLOTFILL_TRAINING_H_
#define SLOTFILL_TRAINING_H_

#include <string>
#include <vector>

#include "slotfill/ensemble.h"
#include "slotfill/resources.h"
#include "slotfill/traindata.h"
#include "slotfill/trainer.h"
#include "slotfill/tuning.h"

namespace slotfill {

// Argument types of a canonical slot, read from a non-swapped member slot.
NegativeSpec NegativeSpecFor(const SlotTable &slots, const std::string &canonical);

struct TrainingSet {
  std::vector<LabeledExample> examples;  // seed plus selected
  size_t positives = 0;
  size_t negatives = 0;
  size_t noisy = 0;
  std::vector<std::string> warnings;
};

// Distant supervision over the training corpus, trigger-cleaned negatives,
// then batched selection against the seed examples of the slot.
// `train_dir` holds corpus.jsonl, kb_instances.tsv and seed.jsonl.
TrainingSet BuildTrainingSet(const Resources &resources, const std::string &train_dir,
                             const std::string &canonical, const SelectionConfig &selection);

struct ModelTraining {
  TrainConfig neural;
  SvmConfig svm;
  CnnDims cnn;
  RnnDims rnn;
  PatternLearning patterns;
  std::string embeddings_path;
};

// Trains one classifier kind for the slot and writes it under `model_dir`.
// Returns the files written.
std::vector<std::string> TrainAndSave(ClassifierKind kind, const std::string &canonical,
                                      const std::vector<LabeledExample> &examples,
                                      const ModelTraining &options, const std::string &model_dir);

// Per-classifier scores of a context under the slot's models; classifiers
// outside `enabled` or without a model stay absent.
ScoreVector ScoreContext(const RelationContext &context, const std::vector<Pattern> &patterns,
                         const SlotModels *models, const std::vector<ClassifierKind> &enabled);

// Scores the dev examples, tunes interpolation weights and per-slot
// thresholds, and writes weights.json and thresholds.json to `model_dir`.
WeightTuning TuneOnDev(const Resources &resources, const ModelStore &models,
                       const std::vector<LabeledExample> &dev, const std::string &model_dir,
                       std::vector<std::string> *warnings);

}  // namespace slotfill

#endif  // SLOTFILL_TRAINING_H_
