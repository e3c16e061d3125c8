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

#ifndef SLOTFILL_NER_H_
#define SLOTFILL_NER_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slotfill/corpus.h"

namespace slotfill {

enum class NeType {
  kPER,
  kORG,
  kGPE,
  kTITLE,
  kCHARGE,
  kRELIGION,
  kCAUSE_OF_DEATH,
  kDATE,
  kNUMBER,
  kURL,
};

std::string_view NeTypeName(NeType type);
NeType ParseNeType(std::string_view name);

struct NESpan {
  int sentence_index = 0;
  int token_start = 0;
  int token_end = 0;
  NeType ne_type = NeType::kPER;
  std::string surface;
  // Set for NUMBER spans with a fractional part.
  bool non_integer = false;

  int length() const { return token_end - token_start; }
  bool Overlaps(const NESpan &other) const {
    return sentence_index == other.sentence_index && token_start < other.token_end &&
           other.token_start < token_end;
  }
};

// Multi-token surface lists, one per NE type. Matching is case-insensitive.
class Gazetteers {
 public:
  // Loads <dir>/<TYPE>.txt for every gazetteer type present.
  static Gazetteers LoadDir(const std::string &dir);

  void Add(NeType type, std::string_view surface);
  // Longest entry of `type` starting at `start`, in tokens; 0 if none.
  int LongestMatch(NeType type, const std::vector<std::string> &lowered, int start) const;
  std::vector<NeType> types() const;

 private:
  std::map<NeType, std::set<std::vector<std::string>>> entries_;
  std::map<NeType, int> max_length_;
};

// Gazetteer lookup plus lexical taggers for DATE, NUMBER and URL. Overlaps
// are resolved longest-first, then leftmost, then by NeType order.
class EntityTagger {
 public:
  explicit EntityTagger(Gazetteers gazetteers) : gazetteers_(std::move(gazetteers)) {}

  std::vector<NESpan> Tag(const Sentence &sentence) const;

 private:
  Gazetteers gazetteers_;
};

// Month number for a month name or abbreviation, 0 if not a month.
int MonthNumber(std::string_view word);

}  // namespace slotfill

#endif  // SLOTFILL_NER_H_
