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

#include "slotfill/patterns.h"

#include <algorithm>
#include <set>

#include "slotfill/embeddings.h"

namespace slotfill {
namespace {

const std::vector<Pattern> kNoPatterns;

}  // namespace

Pattern Pattern::Parse(std::string_view text) {
  Pattern p;
  int entities = 0, fillers = 0;
  for (const std::string &word : SplitWhitespace(text)) {
    Element e{Element::kLiteral, "", 0};
    if (word == "<ENTITY>") {
      e.kind = Element::kEntity;
      ++entities;
    } else if (word == "<FILLER>") {
      e.kind = Element::kFiller;
      ++fillers;
    } else if (word[0] == '*' && (word.size() == 1 || IsDigits(word.substr(1)))) {
      e.kind = Element::kWildcard;
      e.width = word.size() == 1 ? 1 : std::stoi(word.substr(1));
      if (e.width > kMaxWildcard) throw Error("wildcard wider than *5 in '" + std::string(text) + "'");
    } else {
      e.literal = ToLower(word);
    }
    p.elements_.push_back(std::move(e));
  }
  if (entities != 1 || fillers != 1) {
    throw Error("template needs one <ENTITY> and one <FILLER>: '" + std::string(text) + "'");
  }
  return p;
}

bool Pattern::MatchFrom(const std::vector<std::string> &seq, size_t element, size_t pos) const {
  if (element == elements_.size()) return true;
  const Element &e = elements_[element];
  if (e.kind == Element::kWildcard) {
    for (int skip = 0; skip <= e.width && pos + skip <= seq.size(); ++skip) {
      if (MatchFrom(seq, element + 1, pos + skip)) return true;
    }
    return false;
  }
  if (pos >= seq.size()) return false;
  bool ok = false;
  switch (e.kind) {
    case Element::kEntity: ok = seq[pos] == Vocabulary::kEntityMarker; break;
    case Element::kFiller: ok = seq[pos] == Vocabulary::kFillerMarker; break;
    default: ok = seq[pos] == e.literal; break;
  }
  return ok && MatchFrom(seq, element + 1, pos + 1);
}

bool Pattern::MatchesSequence(const std::vector<std::string> &marked) const {
  std::vector<std::string> seq;
  seq.reserve(marked.size());
  for (const std::string &w : marked) {
    bool marker = w == Vocabulary::kEntityMarker || w == Vocabulary::kFillerMarker;
    seq.push_back(marker ? w : ToLower(w));
  }
  for (size_t start = 0; start < seq.size(); ++start) {
    if (MatchFrom(seq, 0, start)) return true;
  }
  return false;
}

bool Pattern::Matches(const RelationContext &context) const {
  return MatchesSequence(MarkedSequence(context));
}

std::string Pattern::ToString() const {
  std::vector<std::string> words;
  for (const Element &e : elements_) {
    switch (e.kind) {
      case Element::kEntity: words.push_back("<ENTITY>"); break;
      case Element::kFiller: words.push_back("<FILLER>"); break;
      case Element::kWildcard: words.push_back("*" + std::to_string(e.width)); break;
      default: words.push_back(e.literal); break;
    }
  }
  return Join(words, " ");
}

PatternSet PatternSet::Parse(std::string_view tsv) {
  PatternSet set;
  int number = 0;
  for (const std::string &line : Split(tsv, '\n')) {
    ++number;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<std::string> f = Split(trimmed, '\t');
    if (f.size() != 2) throw Error("pattern line " + std::to_string(number) + ": expected slot<TAB>template");
    set.Add(f[0], Pattern::Parse(f[1]));
  }
  return set;
}

PatternSet PatternSet::Load(const std::string &path) { return Parse(ReadFile(path)); }

void PatternSet::Add(const std::string &slot, Pattern pattern) {
  std::vector<Pattern> &list = by_slot_[slot];
  std::string text = pattern.ToString();
  for (const Pattern &p : list) {
    if (p.ToString() == text) return;
  }
  list.push_back(std::move(pattern));
}

void PatternSet::Merge(const PatternSet &other) {
  for (const auto &[slot, list] : other.by_slot_) {
    for (const Pattern &p : list) Add(slot, p);
  }
}

const std::vector<Pattern> &PatternSet::For(std::string_view slot) const {
  auto it = by_slot_.find(slot);
  return it == by_slot_.end() ? kNoPatterns : it->second;
}

std::string PatternSet::ToTsv() const {
  std::string out;
  for (const auto &[slot, list] : by_slot_) {
    for (const Pattern &p : list) out += slot + "\t" + p.ToString() + "\n";
  }
  return out;
}

double MatchPatterns(const RelationContext &context, const std::vector<Pattern> &patterns) {
  if (patterns.empty()) return 0.0;
  std::vector<std::string> seq = MarkedSequence(context);
  for (const Pattern &p : patterns) {
    if (p.MatchesSequence(seq)) return 1.0;
  }
  return 0.0;
}

std::vector<Pattern> LearnPatterns(const std::vector<std::pair<RelationContext, int>> &examples,
                                   const PatternLearning &options) {
  std::set<std::string> proposals;
  for (const auto &[context, label] : examples) {
    if (label != 1 || static_cast<int>(context.middle.size()) > options.max_middle) continue;
    // Literals that look like placeholders or wildcards cannot be templated.
    bool plain = std::none_of(context.middle.begin(), context.middle.end(), [](const std::string &w) {
      return w.empty() || w[0] == '*' || w[0] == '<';
    });
    if (!plain) continue;
    std::vector<std::string> words;
    words.emplace_back(context.entity_first ? "<ENTITY>" : "<FILLER>");
    for (const std::string &w : context.middle) words.push_back(ToLower(w));
    words.emplace_back(context.entity_first ? "<FILLER>" : "<ENTITY>");
    proposals.insert(Join(words, " "));
  }
  std::vector<Pattern> kept;
  for (const std::string &text : proposals) {
    Pattern p = Pattern::Parse(text);
    int positives = 0, matched = 0;
    for (const auto &[context, label] : examples) {
      if (!p.Matches(context)) continue;
      ++matched;
      positives += label;
    }
    if (positives >= options.min_support &&
        static_cast<double>(positives) >= options.min_precision * matched) {
      kept.push_back(std::move(p));
    }
  }
  return kept;
}

}  // namespace slotfill
