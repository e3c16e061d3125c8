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

#ifndef SLOTFILL_TRAINDATA_H_
#define SLOTFILL_TRAINDATA_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slotfill/corpus.h"
#include "slotfill/extract.h"
#include "slotfill/linear_model.h"
#include "slotfill/ner.h"
#include "slotfill/patterns.h"

namespace slotfill {

struct RelationInstance {
  std::string subject;
  std::string relation;
  std::string object;
};

// TSV: subject<TAB>relation<TAB>object. Throws on malformed rows.
std::vector<RelationInstance> LoadRelationInstances(const std::string &path);
std::vector<RelationInstance> ParseRelationInstances(std::string_view tsv);

enum class ExampleOrigin { kDistant, kSeed, kSelected };

std::string_view OriginName(ExampleOrigin origin);

struct LabeledExample {
  RelationContext context;
  int label = 0;
  ExampleOrigin origin = ExampleOrigin::kDistant;
  std::string slot;
};

// JSON Lines: {left, middle, right, entity_first, label, slot[, origin]}.
std::vector<LabeledExample> LoadExamples(const std::string &path);
std::vector<LabeledExample> ParseExamples(std::string_view jsonl);
std::string ExamplesToJsonl(const std::vector<LabeledExample> &examples);

// Token spans of `surface` inside `words`, compared case-insensitively.
std::vector<std::pair<int, int>> FindSurface(const std::vector<std::string> &words,
                                             std::string_view surface);

// Per-slot trigger words, phrases or templates. A negative example is
// dropped when a trigger of its slot occurs in the sentence.
class TriggerSet {
 public:
  // TSV: slot<TAB>trigger_or_template
  static TriggerSet Load(const std::string &path);
  static TriggerSet Parse(std::string_view tsv);

  void Add(const std::string &slot, std::string_view trigger);
  bool Fires(std::string_view slot, const std::vector<std::string> &words,
             const RelationContext &context) const;

 private:
  struct Trigger {
    std::string phrase;
    std::vector<Pattern> templates;
  };
  std::map<std::string, std::vector<Trigger>, std::less<>> by_slot_;
};

// One positive per (sentence, instance of `relation`) with both argument
// surfaces present; the subject is the entity.
std::vector<LabeledExample> GeneratePositiveExamples(const DocumentStore &store,
                                                     const std::vector<RelationInstance> &kb,
                                                     const std::string &relation);

struct NegativeSpec {
  std::string relation;
  NeType entity_type = NeType::kPER;
  NeType filler_type = NeType::kGPE;
};

// Pairs of NE spans with the relation's argument types that are not KB
// instances, unless a trigger of the relation occurs in the sentence.
std::vector<LabeledExample> GenerateNegativeExamples(const DocumentStore &store,
                                                     const std::vector<RelationInstance> &kb,
                                                     const NegativeSpec &spec,
                                                     const EntityTagger &tagger,
                                                     const TriggerSet &triggers);

struct SelectionConfig {
  int k = 5;
  double tau = 0.8;
  uint64_t seed = 1;
  SvmConfig svm;
};

struct SelectionResult {
  std::vector<LabeledExample> selected;
  std::vector<std::string> warnings;
};

// Splits the noisy data into k batches; for each batch, trains on seed plus
// everything selected so far and keeps the examples whose predicted label
// agrees with the distant label at confidence >= tau. Selection is
// append-only. Throws when seed_data is empty.
SelectionResult SelectTrainingData(const std::vector<LabeledExample> &noisy,
                                   const std::vector<LabeledExample> &seed_data,
                                   const SelectionConfig &config);

std::vector<std::pair<RelationContext, int>> AsPairs(const std::vector<LabeledExample> &examples);

}  // namespace slotfill

#endif  // SLOTFILL_TRAINDATA_H_
