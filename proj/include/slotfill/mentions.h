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

#ifndef SLOTFILL_MENTIONS_H_
#define SLOTFILL_MENTIONS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slotfill/corpus.h"
#include "slotfill/ner.h"

namespace slotfill {

enum class MentionKind { kExact, kFuzzy, kCoref, kNominalHeuristic };

std::string_view MentionKindName(MentionKind kind);

struct Mention {
  std::string doc_id;
  int sentence_index = 0;
  // Half-open token span.
  int token_start = 0;
  int token_end = 0;
  std::string surface;
  MentionKind kind = MentionKind::kExact;

  bool SameSpan(const Mention &o) const {
    return sentence_index == o.sentence_index && token_start == o.token_start &&
           token_end == o.token_end;
  }
  bool Overlaps(int sentence, int start, int end) const {
    return sentence_index == sentence && token_start < end && start < token_end;
  }
};

enum class MentionClass { kProper, kPronoun, kNominal };

MentionClass ParseMentionClass(std::string_view name);

struct ChainMention {
  int sentence_index = 0;
  int token_start = 0;
  int token_end = 0;
  std::string surface;
  MentionClass mention_class = MentionClass::kProper;
};

struct CorefChain {
  std::string doc_id;
  std::string chain_id;
  std::vector<ChainMention> mentions;
};

using CorefResource = std::map<std::string, std::vector<CorefChain>, std::less<>>;

// Reads the precomputed chain TSV:
//   doc_id chain_id sentence_index token_start token_end mention_class surface
// one mention per line, chains contiguous. Bad lines and chains with fewer
// than two mentions are skipped with a warning.
CorefResource LoadCorefResource(const std::string &path, std::vector<std::string> *warnings);
CorefResource ParseCorefResource(std::string_view tsv, std::vector<std::string> *warnings);

// Maximum normalized edit distance for a fuzzy name match.
constexpr double kFuzzyThreshold = 0.2;

// Token windows within kFuzzyThreshold of some name (distance divided by the
// longer string's length, case-insensitive). Windows inside a longer match
// are dropped.
std::vector<Mention> FindNameMentions(const Document &doc, const std::vector<std::string> &names);

// Mentions of every chain overlapping a seed, minus spans already seeded.
// Chains made only of pronouns are never adopted.
std::vector<Mention> AttachCorefMentions(const Document &doc, const std::vector<CorefChain> &chains,
                                         const std::vector<Mention> &seed);

// Sentence-initial "the XX-year-old", "the XX-based company" and "the XX-born"
// (XX up to three tokens) directly after a sentence with a seed mention,
// unless a PER or ORG entity starts within the next three tokens.
std::vector<Mention> NominalAnaphoraHeuristic(const Document &doc,
                                              const std::vector<Mention> &seed,
                                              const EntityTagger &tagger);

// Proper-name surface for a person filler span that sits in a chain: the
// span itself when it is the proper mention, else the chain's longest
// proper mention.
std::optional<std::string> ExpandPersonFiller(const Document &doc,
                                              const std::vector<CorefChain> &chains,
                                              int sentence_index, int token_start, int token_end);

// Personal pronouns in `sentence` whose chain has a proper mention, as PER
// spans usable as fillers.
std::vector<NESpan> PronounPersonSpans(const Document &doc, const std::vector<CorefChain> &chains,
                                       int sentence_index);

// True when a chain mention lies within the document's sentence bounds.
bool ValidChainMention(const Document &doc, const ChainMention &m);

}  // namespace slotfill

#endif  // SLOTFILL_MENTIONS_H_
