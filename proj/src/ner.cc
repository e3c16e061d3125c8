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

#include "slotfill/ner.h"

#include <algorithm>
#include <filesystem>
#include <regex>

namespace slotfill {
namespace {

constexpr NeType kGazetteerTypes[] = {NeType::kPER,      NeType::kORG,      NeType::kGPE,
                                      NeType::kTITLE,    NeType::kCHARGE,   NeType::kRELIGION,
                                      NeType::kCAUSE_OF_DEATH};

bool IsDay(std::string_view w) {
  if (!IsDigits(w) || w.size() > 2) return false;
  int d = std::stoi(std::string(w));
  return d >= 1 && d <= 31;
}

bool IsYear(std::string_view w) {
  static const std::regex kYear("^(1[0-9]|20)[0-9]{2}$");
  return std::regex_match(w.begin(), w.end(), kYear);
}

// Length in tokens of a date expression starting at `i`, 0 if none.
int DateLength(const std::vector<std::string> &words, size_t i) {
  static const std::regex kIso("^[0-9]{4}-[0-9]{2}-[0-9]{2}$");
  static const std::regex kSlash("^[0-9]{1,2}/[0-9]{1,2}/[0-9]{4}$");
  auto at = [&](size_t k) -> std::string_view {
    return k < words.size() ? std::string_view(words[k]) : std::string_view();
  };
  if (MonthNumber(at(i)) > 0) {
    if (IsDay(at(i + 1)) && at(i + 2) == "," && IsYear(at(i + 3))) return 4;
    if (IsDay(at(i + 1)) && IsYear(at(i + 2))) return 3;
    if (IsYear(at(i + 1))) return 2;
    return 0;
  }
  if (IsDay(at(i)) && MonthNumber(at(i + 1)) > 0 && IsYear(at(i + 2))) return 3;
  const std::string &w = words[i];
  if (std::regex_match(w, kIso) || std::regex_match(w, kSlash) || IsYear(w)) return 1;
  return 0;
}

}  // namespace

std::string_view NeTypeName(NeType type) {
  switch (type) {
    case NeType::kPER: return "PER";
    case NeType::kORG: return "ORG";
    case NeType::kGPE: return "GPE";
    case NeType::kTITLE: return "TITLE";
    case NeType::kCHARGE: return "CHARGE";
    case NeType::kRELIGION: return "RELIGION";
    case NeType::kCAUSE_OF_DEATH: return "CAUSE_OF_DEATH";
    case NeType::kDATE: return "DATE";
    case NeType::kNUMBER: return "NUMBER";
    case NeType::kURL: return "URL";
  }
  return "?";
}

NeType ParseNeType(std::string_view name) {
  for (NeType t : {NeType::kPER, NeType::kORG, NeType::kGPE, NeType::kTITLE, NeType::kCHARGE,
                   NeType::kRELIGION, NeType::kCAUSE_OF_DEATH, NeType::kDATE, NeType::kNUMBER,
                   NeType::kURL}) {
    if (NeTypeName(t) == name) return t;
  }
  throw Error("unknown NE type '" + std::string(name) + "'");
}

int MonthNumber(std::string_view word) {
  static const char *const kNames[] = {"january", "february", "march",     "april",
                                       "may",     "june",     "july",      "august",
                                       "september", "october", "november", "december"};
  std::string w = ToLower(word);
  if (!w.empty() && w.back() == '.') w.pop_back();
  for (int m = 0; m < 12; ++m) {
    std::string_view full = kNames[m];
    if (w == full) return m + 1;
    if (w.size() == 3 && full.substr(0, 3) == w) return m + 1;
  }
  if (w == "sept") return 9;
  return 0;
}

Gazetteers Gazetteers::LoadDir(const std::string &dir) {
  Gazetteers g;
  for (NeType type : kGazetteerTypes) {
    std::filesystem::path path = std::filesystem::path(dir) / (std::string(NeTypeName(type)) + ".txt");
    if (!std::filesystem::exists(path)) continue;
    for (const std::string &line : ReadLines(path.string())) {
      std::string entry = Trim(line);
      if (!entry.empty() && entry[0] != '#') g.Add(type, entry);
    }
  }
  return g;
}

void Gazetteers::Add(NeType type, std::string_view surface) {
  std::vector<std::string> key;
  for (const Token &t : Tokenize(surface)) key.push_back(ToLower(t.text));
  if (key.empty()) return;
  int &max = max_length_[type];
  max = std::max(max, static_cast<int>(key.size()));
  entries_[type].insert(std::move(key));
}

int Gazetteers::LongestMatch(NeType type, const std::vector<std::string> &lowered,
                             int start) const {
  auto it = entries_.find(type);
  if (it == entries_.end()) return 0;
  int limit = std::min(max_length_.at(type), static_cast<int>(lowered.size()) - start);
  for (int len = limit; len >= 1; --len) {
    std::vector<std::string> key(lowered.begin() + start, lowered.begin() + start + len);
    if (it->second.count(key) > 0) return len;
  }
  return 0;
}

std::vector<NeType> Gazetteers::types() const {
  std::vector<NeType> out;
  for (const auto &[type, set] : entries_) out.push_back(type);
  return out;
}

std::vector<NESpan> EntityTagger::Tag(const Sentence &sentence) const {
  static const std::regex kNumber("^([0-9]{1,3}(,[0-9]{3})+|[0-9]+)(\\.[0-9]+)?$");
  static const std::regex kUrl("^(https?://|www\\.)\\S+$");

  std::vector<std::string> words = sentence.Words();
  std::vector<std::string> lowered;
  for (const std::string &w : words) lowered.push_back(ToLower(w));

  std::vector<NESpan> found;
  auto add = [&](int start, int len, NeType type) {
    NESpan span;
    span.sentence_index = sentence.index;
    span.token_start = start;
    span.token_end = start + len;
    span.ne_type = type;
    span.surface = sentence.Span(start, start + len);
    if (type == NeType::kNUMBER) span.non_integer = span.surface.find('.') != std::string::npos;
    found.push_back(std::move(span));
  };
  for (int i = 0; i < static_cast<int>(words.size()); ++i) {
    for (NeType type : kGazetteerTypes) {
      if (int len = gazetteers_.LongestMatch(type, lowered, i); len > 0) add(i, len, type);
    }
    if (int len = DateLength(words, i); len > 0) add(i, len, NeType::kDATE);
    if (std::regex_match(words[i], kNumber)) add(i, 1, NeType::kNUMBER);
    if (std::regex_match(words[i], kUrl)) add(i, 1, NeType::kURL);
  }

  std::stable_sort(found.begin(), found.end(), [](const NESpan &a, const NESpan &b) {
    if (a.length() != b.length()) return a.length() > b.length();
    if (a.token_start != b.token_start) return a.token_start < b.token_start;
    return a.ne_type < b.ne_type;
  });
  std::vector<NESpan> kept;
  for (NESpan &span : found) {
    bool clash = std::any_of(kept.begin(), kept.end(),
                             [&](const NESpan &k) { return k.Overlaps(span); });
    if (!clash) kept.push_back(std::move(span));
  }
  std::sort(kept.begin(), kept.end(), [](const NESpan &a, const NESpan &b) {
    return a.token_start < b.token_start;
  });
  return kept;
}

}  // namespace slotfill
