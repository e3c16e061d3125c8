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

#ifndef SLOTFILL_PATTERNS_H_
#define SLOTFILL_PATTERNS_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "slotfill/extract.h"

namespace slotfill {

// Token template over the marked sequence of a candidate: literals (matched
// case-insensitively), the placeholders <ENTITY> and <FILLER>, and bounded
// wildcards "*k" matching 0..k tokens. A template matches anywhere in the
// sentence.
class Pattern {
 public:
  static constexpr int kMaxWildcard = 5;

  // Throws Error unless the template has exactly one <ENTITY>, one <FILLER>
  // and wildcards no wider than kMaxWildcard.
  static Pattern Parse(std::string_view text);

  bool Matches(const RelationContext &context) const;
  bool MatchesSequence(const std::vector<std::string> &marked) const;
  std::string ToString() const;

 private:
  struct Element {
    enum Kind { kLiteral, kEntity, kFiller, kWildcard } kind;
    std::string literal;
    int width = 0;
  };

  bool MatchFrom(const std::vector<std::string> &seq, size_t element, size_t pos) const;

  std::vector<Element> elements_;
};

class PatternSet {
 public:
  // TSV: slot<TAB>template
  static PatternSet Load(const std::string &path);
  static PatternSet Parse(std::string_view tsv);

  void Add(const std::string &slot, Pattern pattern);
  void Merge(const PatternSet &other);
  const std::vector<Pattern> &For(std::string_view slot) const;
  std::string ToTsv() const;

 private:
  std::map<std::string, std::vector<Pattern>, std::less<>> by_slot_;
};

// 1.0 when any pattern matches the candidate context, else 0.0.
double MatchPatterns(const RelationContext &context, const std::vector<Pattern> &patterns);

struct PatternLearning {
  int min_support = 2;
  double min_precision = 0.8;
  int max_middle = 4;
};

// Induces "<ENTITY> middle <FILLER>" templates from short middle contexts of
// positive examples, keeping those with enough support and precision on the
// whole labeled set.
std::vector<Pattern> LearnPatterns(const std::vector<std::pair<RelationContext, int>> &examples,
                                   const PatternLearning &options = {});

}  // namespace slotfill

#endif  // SLOTFILL_PATTERNS_H_
