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

#include "slotfill/extract.h"

#include <algorithm>
#include <cstdlib>

#include "slotfill/postprocess.h"

namespace slotfill {

RelationContext SplitContexts(const std::vector<std::string> &tokens, int entity_start,
                              int entity_end, int filler_start, int filler_end) {
  const int n = static_cast<int>(tokens.size());
  if (entity_start < 0 || entity_end > n || entity_start >= entity_end || filler_start < 0 ||
      filler_end > n || filler_start >= filler_end) {
    throw Error("span outside sentence");
  }
  if (entity_start < filler_end && filler_start < entity_end) {
    throw Error("entity and filler spans overlap");
  }
  RelationContext c;
  c.entity_first = entity_start < filler_start;
  const int first_start = std::min(entity_start, filler_start);
  const int first_end = c.entity_first ? entity_end : filler_end;
  const int second_start = c.entity_first ? filler_start : entity_start;
  const int last_end = std::max(entity_end, filler_end);
  c.left.assign(tokens.begin(), tokens.begin() + first_start);
  c.middle.assign(tokens.begin() + first_end, tokens.begin() + second_start);
  c.right.assign(tokens.begin() + last_end, tokens.end());
  return c;
}

RelationContext SwapArguments(const RelationContext &context) {
  RelationContext swapped = context;
  swapped.entity_first = !context.entity_first;
  return swapped;
}

std::vector<Candidate> CandidatesForSlot(const Document &doc, const Sentence &sentence,
                                         const std::vector<Mention> &entity_mentions,
                                         const std::vector<NESpan> &filler_spans,
                                         const SlotConfig &config,
                                         const std::vector<CorefChain> *chains,
                                         const std::string &query_id) {
  std::vector<Mention> mentions;
  for (const Mention &m : entity_mentions) {
    if (m.sentence_index == sentence.index) mentions.push_back(m);
  }
  std::vector<NESpan> fillers;
  for (const NESpan &f : filler_spans) {
    if (f.sentence_index != sentence.index || f.ne_type != config.filler_type) continue;
    bool on_entity = std::any_of(mentions.begin(), mentions.end(), [&](const Mention &m) {
      return m.Overlaps(f.sentence_index, f.token_start, f.token_end);
    });
    if (!on_entity) fillers.push_back(f);
  }
  auto by_position = [](const auto &a, const auto &b) {
    if (a.token_start != b.token_start) return a.token_start < b.token_start;
    return a.token_end < b.token_end;
  };
  std::sort(mentions.begin(), mentions.end(), by_position);
  std::sort(fillers.begin(), fillers.end(), by_position);

  std::vector<std::string> words = sentence.Words();
  std::vector<Candidate> out;
  for (const Mention &m : mentions) {
    for (const NESpan &f : fillers) {
      Candidate c;
      c.query_id = query_id;
      c.slot = config.slot;
      c.doc_id = doc.id;
      c.entity_mention = m;
      c.filler = f;
      c.context = SplitContexts(words, m.token_start, m.token_end, f.token_start, f.token_end);
      c.canonical_filler = f.surface;
      if (f.ne_type == NeType::kPER && chains != nullptr) {
        if (auto expanded = ExpandPersonFiller(doc, *chains, f.sentence_index, f.token_start,
                                               f.token_end)) {
          c.canonical_filler = *expanded;
        }
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

bool FilterImpossible(const Candidate &candidate, const SlotConfig &config) {
  const FillerValidation &v = config.validation;
  const NESpan &f = candidate.filler;
  if (ToLower(candidate.canonical_filler) == ToLower(candidate.entity_mention.surface)) return false;
  if (v.integer_only || v.min_value || v.max_value) {
    if (f.ne_type != NeType::kNUMBER) return false;
    if (v.integer_only && f.non_integer) return false;
    std::string digits;
    for (char c : f.surface) {
      if (c != ',') digits += c;
    }
    double value = std::strtod(digits.c_str(), nullptr);
    if (v.min_value && value < *v.min_value) return false;
    if (v.max_value && value > *v.max_value) return false;
  }
  if (v.date && !NormalizeDate(f.surface).has_value()) return false;
  return true;
}

}  // namespace slotfill
