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

#include "slotfill/corpus.h"

#include <cctype>
#include <string_view>

#include "json.hpp"

namespace slotfill {
namespace {

constexpr std::string_view kLeadingPunct = "\"'`([{<$";
constexpr std::string_view kTrailingPunct = ".,;:!?\"')]}>";

bool IsLeading(char c) { return kLeadingPunct.find(c) != std::string_view::npos; }
bool IsTrailing(char c) { return kTrailingPunct.find(c) != std::string_view::npos; }

bool IsSentenceFinal(std::string_view t) { return t == "." || t == "!" || t == "?"; }
bool IsClosing(std::string_view t) {
  return t == "\"" || t == "'" || t == ")" || t == "]" || t == "}";
}

void TokenizeWord(std::string_view word, size_t start, const Abbreviations &abbrevs,
                  std::vector<Token> *out) {
  if (abbrevs.Contains(word) || word == "'s") {
    out->push_back({std::string(word), start, start + word.size()});
    return;
  }
  size_t b = 0, e = word.size();
  std::vector<Token> trailing;
  while (b < e && IsLeading(word[b]) && e - b > 1) {
    out->push_back({std::string(1, word[b]), start + b, start + b + 1});
    ++b;
  }
  while (e > b && IsTrailing(word[e - 1])) {
    if (abbrevs.Contains(word.substr(b, e - b))) break;
    trailing.push_back({std::string(1, word[e - 1]), start + e - 1, start + e});
    --e;
  }
  std::string_view core = word.substr(b, e - b);
  std::string_view possessive;
  if (core.size() > 2 && EndsWith(core, "'s")) {
    possessive = core.substr(core.size() - 2);
  } else if (core.size() > 4 && EndsWith(core, "\xE2\x80\x99s")) {
    possessive = core.substr(core.size() - 4);
  }
  if (!possessive.empty()) core = core.substr(0, core.size() - possessive.size());
  if (!core.empty()) out->push_back({std::string(core), start + b, start + b + core.size()});
  if (!possessive.empty()) {
    size_t p = start + b + core.size();
    out->push_back({std::string(possessive), p, p + possessive.size()});
  }
  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) out->push_back(*it);
}

bool IsTagEnd(std::string_view text, size_t pos) {
  return pos < text.size() &&
         (text[pos] == '>' || std::isspace(static_cast<unsigned char>(text[pos])));
}

// Position of the last "<quote" opening tag starting before `limit`.
size_t FindOpenBefore(const std::string &lower, size_t limit) {
  size_t pos = lower.rfind("<quote", limit == 0 ? 0 : limit - 1);
  while (pos != std::string::npos) {
    if (pos + 6 <= limit && IsTagEnd(lower, pos + 6)) return pos;
    if (pos == 0) break;
    pos = lower.rfind("<quote", pos - 1);
  }
  return std::string::npos;
}

}  // namespace

std::string_view GenreName(Genre genre) {
  return genre == Genre::kNews ? "news" : "forum";
}

Genre ParseGenre(std::string_view name) {
  if (name == "news") return Genre::kNews;
  if (name == "forum") return Genre::kForum;
  throw Error("unknown genre '" + std::string(name) + "'");
}

std::vector<std::string> Sentence::Words() const {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const Token &t : tokens) words.push_back(t.text);
  return words;
}

std::string Sentence::Span(int token_start, int token_end) const {
  std::string out;
  for (int i = token_start; i < token_end; ++i) {
    // Keep the source spacing: "March 4, 1988", not "March 4 , 1988".
    if (i > token_start && tokens[i].char_start > tokens[i - 1].char_end) out += ' ';
    out += tokens[i].text;
  }
  return out;
}

const Abbreviations &Abbreviations::Default() {
  static const Abbreviations kDefault(
      {"Dr.", "Mr.", "Mrs.", "Ms.", "Inc.", "Corp.", "Co.", "U.S.", "St."});
  return kDefault;
}

Abbreviations Abbreviations::Load(const std::string &path) {
  std::vector<std::string> entries;
  for (const std::string &line : ReadLines(path)) {
    std::string entry = Trim(line);
    if (!entry.empty() && entry[0] != '#') entries.push_back(entry);
  }
  return Abbreviations(std::move(entries));
}

Abbreviations::Abbreviations(std::vector<std::string> entries)
    : entries_(entries.begin(), entries.end()) {}

bool Abbreviations::Contains(std::string_view word) const {
  return entries_.count(std::string(word)) > 0;
}

std::vector<Token> Tokenize(std::string_view text, size_t base, const Abbreviations &abbrevs) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) TokenizeWord(text.substr(i, j - i), base + i, abbrevs, &tokens);
    i = j;
  }
  return tokens;
}

std::vector<CharSpan> SplitSentences(std::string_view text, Genre genre,
                                     const Abbreviations &abbrevs) {
  std::vector<CharSpan> spans;
  std::vector<Token> tokens = Tokenize(text, 0, abbrevs);
  size_t first = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    bool boundary = false;
    if (IsSentenceFinal(tokens[i].text)) {
      // Closing quotes and brackets glued to the terminator stay with it.
      while (i + 1 < tokens.size() && IsClosing(tokens[i + 1].text) &&
             tokens[i + 1].char_start == tokens[i].char_end) {
        ++i;
      }
      boundary = true;
    }
    if (!boundary && genre == Genre::kForum && i + 1 < tokens.size()) {
      std::string_view gap =
          text.substr(tokens[i].char_end, tokens[i + 1].char_start - tokens[i].char_end);
      boundary = gap.find('\n') != std::string_view::npos;
    }
    if (boundary || i + 1 == tokens.size()) {
      spans.push_back({tokens[first].char_start, tokens[i].char_end});
      first = i + 1;
    }
  }
  return spans;
}

std::string RemoveQuotes(std::string_view text, std::vector<std::string> *warnings) {
  std::string out(text);
  std::string lower = ToLower(out);
  constexpr std::string_view kClose = "</quote>";
  while (true) {
    size_t close = lower.find(kClose);
    if (close == std::string::npos) break;
    size_t open = FindOpenBefore(lower, close);
    size_t from = open == std::string::npos ? close : open;
    if (open == std::string::npos && warnings != nullptr) {
      warnings->push_back("stray </quote> at offset " + std::to_string(close));
    }
    size_t to = close + kClose.size();
    out.erase(from, to - from);
    lower.erase(from, to - from);
  }
  size_t open = FindOpenBefore(lower, lower.size());
  if (open != std::string::npos) {
    // Innermost-first removal leaves at most the outermost unclosed tag; find
    // the earliest one so nothing quoted survives.
    size_t earliest = lower.find("<quote");
    while (earliest != std::string::npos && !IsTagEnd(lower, earliest + 6)) {
      earliest = lower.find("<quote", earliest + 1);
    }
    if (earliest != std::string::npos) open = earliest;
    if (warnings != nullptr) {
      warnings->push_back("unclosed <quote> at offset " + std::to_string(open) +
                          "; dropped to end of document");
    }
    out.erase(open);
  }
  return out;
}

bool NeedsCaseNormalization(std::string_view token) {
  bool upper_after_first = false;
  bool all_upper = true;
  bool any_letter = false;
  for (size_t i = 0; i < token.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(token[i]);
    if (!std::isalpha(c)) continue;
    any_letter = true;
    if (std::isupper(c)) {
      if (i > 0) upper_after_first = true;
    } else {
      all_upper = false;
    }
  }
  return any_letter && upper_after_first && !all_upper;
}

Document PreprocessGenre(Document doc) {
  if (doc.genre == Genre::kNews) {
    doc.text = doc.raw_text;
    return doc;
  }
  std::string text = RemoveQuotes(doc.raw_text, &doc.warnings);
  for (const Token &token : Tokenize(text)) {
    if (!NeedsCaseNormalization(token.text)) continue;
    for (size_t i = token.char_start; i < token.char_end; ++i) {
      text[i] = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    }
  }
  doc.text = std::move(text);
  return doc;
}

Document BuildDocument(std::string id, Genre genre, std::string raw_text,
                       const Abbreviations &abbrevs) {
  Document doc;
  doc.id = std::move(id);
  doc.genre = genre;
  doc.raw_text = std::move(raw_text);
  doc = PreprocessGenre(std::move(doc));
  int index = 0;
  for (const CharSpan &span : SplitSentences(doc.text, doc.genre, abbrevs)) {
    Sentence sentence;
    sentence.char_start = span.start;
    sentence.char_end = span.end;
    sentence.tokens = Tokenize(
        std::string_view(doc.text).substr(span.start, span.end - span.start), span.start,
        abbrevs);
    if (sentence.tokens.empty()) continue;
    sentence.index = index++;
    doc.sentences.push_back(std::move(sentence));
  }
  return doc;
}

void DocumentStore::Add(Document doc) {
  if (doc.id.empty()) throw Error("document id must be nonempty");
  if (by_id_.count(doc.id) > 0) throw Error("duplicate document id '" + doc.id + "'");
  by_id_.emplace(doc.id, documents_.size());
  documents_.push_back(std::move(doc));
}

const Document *DocumentStore::Find(std::string_view id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &documents_[it->second];
}

IngestResult IngestDocumentsFromString(std::string_view jsonl, const Abbreviations &abbrevs) {
  IngestResult result;
  int number = 0;
  size_t pos = 0;
  while (pos <= jsonl.size()) {
    size_t nl = jsonl.find('\n', pos);
    if (nl == std::string_view::npos) nl = jsonl.size();
    std::string_view line = jsonl.substr(pos, nl - pos);
    pos = nl + 1;
    ++number;
    if (Trim(line).empty()) continue;

    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    auto fail = [&](const std::string &msg) { result.errors.push_back({number, msg}); };
    if (record.is_discarded() || !record.is_object()) {
      fail("not a JSON object");
      continue;
    }
    if (record.size() != 3 || !record.contains("id") || !record.contains("genre") ||
        !record.contains("text")) {
      fail("expected exactly the keys id, genre, text");
      continue;
    }
    if (!record["id"].is_string() || !record["genre"].is_string() || !record["text"].is_string()) {
      fail("id, genre and text must be strings");
      continue;
    }
    std::string id = record["id"].get<std::string>();
    std::string genre = record["genre"].get<std::string>();
    if (id.empty()) {
      fail("empty id");
      continue;
    }
    if (genre != "news" && genre != "forum") {
      fail("genre must be news or forum");
      continue;
    }
    if (result.store.Find(id) != nullptr) {
      throw Error("line " + std::to_string(number) + ": duplicate document id '" + id + "'");
    }
    result.store.Add(BuildDocument(id, ParseGenre(genre), record["text"].get<std::string>(),
                                   abbrevs));
  }
  return result;
}

IngestResult IngestDocuments(const std::string &path, const Abbreviations &abbrevs) {
  return IngestDocumentsFromString(ReadFile(path), abbrevs);
}

}  // namespace slotfill
