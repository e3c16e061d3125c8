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

#ifndef SLOTFILL_PIPELINE_H_
#define SLOTFILL_PIPELINE_H_

#include <map>
#include <string>
#include <vector>

#include "slotfill/ensemble.h"
#include "slotfill/postprocess.h"
#include "slotfill/query.h"
#include "slotfill/resources.h"
#include "slotfill/retrieval.h"

namespace slotfill {

struct RunConfig {
  int run_id = 2;
  std::vector<ClassifierKind> classifiers;
  bool entity_linking = false;
  double threshold_bonus = 0.0;
  bool coref_enabled = true;

  bool Uses(ClassifierKind kind) const;
};

// 1: pattern+svm+cnn, +0.2 threshold. 2: pattern+svm+cnn. 3: adds rnn.
// 4: run 2 with entity linking. 5: pattern+svm. Throws for other ids.
RunConfig ConfigureRun(int run_id);

// Read-only state shared by all queries of a run.
class SlotFiller {
 public:
  SlotFiller(const Resources &resources, const InvertedIndex &index, const ModelStore &models);

  // Answers for one slot of one entity at the query's hop.
  std::vector<Answer> RunQuery(const SlotQuery &query, const RunConfig &config) const;

  // Hop 0, then the hop-1 slot for every hop-0 filler.
  std::vector<Answer> RunColdStart(const SlotQuery &query, const RunConfig &config) const;

  // Throws Error naming the slot when a classifier the run needs is missing.
  void CheckModels(const std::string &slot, const RunConfig &config) const;

 private:
  std::vector<Pattern> PatternsFor(const std::string &canonical) const;
  std::vector<RetrievalResult> GateByEntityLinking(const SlotQuery &query,
                                                   std::vector<RetrievalResult> docs) const;

  const Resources &resources_;
  const InvertedIndex &index_;
  const ModelStore &models_;
};

// query_id hop slot filler doc_id score, score with four decimals.
std::string FormatAnswers(const std::vector<Answer> &answers);

struct OutputRow {
  std::string query_id;
  int hop = 0;
  std::string slot;
  std::string filler;
};

// Reads system output or a gold key; columns past the fourth are ignored.
std::vector<OutputRow> ParseOutputRows(std::string_view tsv);
std::vector<OutputRow> LoadOutputRows(const std::string &path);

struct EvalCounts {
  int tp = 0;
  int fp = 0;
  int fn = 0;
};

struct EvalResult {
  double precision = 0.0;  // percent
  double recall = 0.0;     // percent
  double f1 = 0.0;         // percent
  EvalCounts counts;
};

// Micro-averaged over all queries and hops. A system row matches a gold row
// with the same query, hop, slot and case-folded filler.
EvalResult ScoreOutput(const std::vector<OutputRow> &system, const std::vector<OutputRow> &gold);

// 2pr/(p+r) on percentages, 0 when p+r = 0.
double F1(double precision, double recall);
// Rounded to two decimals for reporting.
double RoundPercent(double value);

}  // namespace slotfill

#endif  // SLOTFILL_PIPELINE_H_
