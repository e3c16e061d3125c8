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

#ifndef SLOTFILL_EXTRACT_H_
#define SLOTFILL_EXTRACT_H_

#include <string>
#include <vector>

#include "slotfill/corpus.h"
#include "slotfill/mentions.h"
#include "slotfill/ner.h"
#include "slotfill/slots.h"

namespace slotfill {

// Token contexts around an (entity, filler) pair: left of both spans,
// strictly between them, and right of both.
struct RelationContext {
  std::vector<std::string> left;
  std::vector<std::string> middle;
  std::vector<std::string> right;
  bool entity_first = true;

  bool operator==(const RelationContext &) const = default;
};

struct Candidate {
  std::string query_id;
  std::string slot;
  std::string doc_id;
  Mention entity_mention;
  NESpan filler;
  RelationContext context;
  // Filler surface after person coreference expansion.
  std::string canonical_filler;
};

// Partitions a sentence around two disjoint half-open spans. Throws Error
// when the spans overlap.
RelationContext SplitContexts(const std::vector<std::string> &tokens, int entity_start,
                              int entity_end, int filler_start, int filler_end);

// Same context with entity and filler roles exchanged.
RelationContext SwapArguments(const RelationContext &context);

// One candidate per (entity mention, filler span) pair in `sentence` whose
// filler type fits the slot. Fillers overlapping an entity mention are
// skipped. Person fillers are canonicalized through `chains` when given.
std::vector<Candidate> CandidatesForSlot(const Document &doc, const Sentence &sentence,
                                         const std::vector<Mention> &entity_mentions,
                                         const std::vector<NESpan> &filler_spans,
                                         const SlotConfig &config,
                                         const std::vector<CorefChain> *chains,
                                         const std::string &query_id);

// False for fillers that cannot be valid for the slot: fractional counts or
// ages, values outside the slot's range, unparseable dates, and fillers
// equal to the entity itself.
bool FilterImpossible(const Candidate &candidate, const SlotConfig &config);

}  // namespace slotfill

#endif  // SLOTFILL_EXTRACT_H_
