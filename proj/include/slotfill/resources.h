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

#ifndef SLOTFILL_RESOURCES_H_
#define SLOTFILL_RESOURCES_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slotfill/cnn.h"
#include "slotfill/corpus.h"
#include "slotfill/ensemble.h"
#include "slotfill/linear_model.h"
#include "slotfill/mentions.h"
#include "slotfill/ner.h"
#include "slotfill/patterns.h"
#include "slotfill/postprocess.h"
#include "slotfill/query.h"
#include "slotfill/rnn.h"
#include "slotfill/slots.h"
#include "slotfill/traindata.h"

namespace slotfill {

// Everything read from a data directory:
//   corpus.jsonl abbreviations.txt aliases.tsv nicknames.tsv kb.jsonl
//   coref.tsv slots.json patterns.tsv triggers.tsv gazetteers/ locations/
// Optional files may be absent; slots.json and corpus.jsonl are required.
struct Resources {
  std::string dir;
  std::unique_ptr<Abbreviations> abbreviations;
  DocumentStore store;
  std::vector<LineError> ingest_errors;
  AliasTable aliases;
  NicknameTable nicknames;
  KnowledgeBase kb;
  CorefResource coref;
  Gazetteers gazetteers;
  std::unique_ptr<EntityTagger> tagger;
  SlotTable slots;
  PatternSet patterns;
  TriggerSet triggers;
  LocationMaps locations;
  std::vector<std::string> warnings;

  static Resources LoadDir(const std::string &dir);
};

// Trained classifiers of one canonical slot.
struct SlotModels {
  std::optional<LinearModel> svm;
  std::optional<CnnModel> cnn;
  std::optional<RnnModel> rnn_uni;
  std::optional<RnnModel> rnn_bi;
  std::optional<RnnModel> rnn_multitask;
  bool has_rnn() const { return rnn_uni || rnn_bi || rnn_multitask; }
};

// "per:location_of_birth" -> "per_location_of_birth".
std::string SlotFileStem(std::string_view slot);

// Model directory: <stem>.svm.json, <stem>.cnn.json, <stem>.rnn-<variant>.json,
// <stem>.patterns.tsv, weights.json, thresholds.json.
class ModelStore {
 public:
  static ModelStore LoadDir(const std::string &dir);

  const SlotModels *Find(std::string_view canonical_slot) const;
  const PatternSet &learned_patterns() const { return patterns_; }
  const WeightTable &weights() const { return weights_; }
  std::optional<double> Threshold(std::string_view canonical_slot) const;

  void SetModels(const std::string &slot, SlotModels models) { models_[slot] = std::move(models); }
  void SetWeights(WeightTable weights) { weights_ = std::move(weights); }
  void SetThresholds(const std::map<std::string, double> &t) { thresholds_.insert(t.begin(), t.end()); }
  void AddPatterns(const PatternSet &p) { patterns_.Merge(p); }

 private:
  std::map<std::string, SlotModels, std::less<>> models_;
  PatternSet patterns_;
  WeightTable weights_;
  std::map<std::string, double, std::less<>> thresholds_;
};

}  // namespace slotfill

#endif  // SLOTFILL_RESOURCES_H_
