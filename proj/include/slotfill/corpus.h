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

#ifndef SLOTFILL_CORPUS_H_
#define SLOTFILL_CORPUS_H_

#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "slotfill/util.h"

namespace slotfill {

enum class Genre { kNews, kForum };

std::string_view GenreName(Genre genre);
Genre ParseGenre(std::string_view name);

struct Token {
  std::string text;
  // Offsets into Document::text.
  size_t char_start = 0;
  size_t char_end = 0;
};

struct Sentence {
  int index = 0;
  size_t char_start = 0;
  size_t char_end = 0;
  std::vector<Token> tokens;

  std::vector<std::string> Words() const;
  std::string Span(int token_start, int token_end) const;
};

struct Document {
  std::string id;
  Genre genre = Genre::kNews;
  std::string raw_text;
  // Preprocessed text; equal to raw_text for news. Token offsets index this.
  std::string text;
  std::vector<Sentence> sentences;
  std::vector<std::string> warnings;
};

struct CharSpan {
  size_t start = 0;
  size_t end = 0;
  bool operator==(const CharSpan &) const = default;
};

// Abbreviations that keep their trailing period and never end a sentence.
class Abbreviations {
 public:
  // Dr. Mr. Mrs. Ms. Inc. Corp. Co. U.S. St.
  static const Abbreviations &Default();
  static Abbreviations Load(const std::string &path);

  explicit Abbreviations(std::vector<std::string> entries);
  bool Contains(std::string_view word) const;

 private:
  std::unordered_set<std::string> entries_;
};

// Splits on whitespace, then peels leading/trailing punctuation and a
// possessive "'s". Hyphenated words and known abbreviations stay whole.
// Offsets are relative to `text` plus `base`.
std::vector<Token> Tokenize(std::string_view text, size_t base = 0,
                            const Abbreviations &abbrevs = Abbreviations::Default());

// Sentence spans over preprocessed text. Sentences end at '.', '!' or '?'
// tokens; forum text additionally breaks at newlines.
std::vector<CharSpan> SplitSentences(std::string_view text, Genre genre,
                                     const Abbreviations &abbrevs = Abbreviations::Default());

// Removes <quote>...</quote> spans innermost-first from forum text.
// An unclosed tag drops everything to the end and adds a warning.
std::string RemoveQuotes(std::string_view text, std::vector<std::string> *warnings);

// Lowercases tokens with an uppercase letter past the first position that
// are not entirely uppercase ("sErVice" -> "service", "NASA" unchanged).
bool NeedsCaseNormalization(std::string_view token);

// Applies genre preprocessing to doc.raw_text, filling doc.text. Forum
// documents lose quoted spans and get casing normalized; news passes through.
Document PreprocessGenre(Document doc);

// Preprocesses, splits and tokenizes a fresh document.
Document BuildDocument(std::string id, Genre genre, std::string raw_text,
                       const Abbreviations &abbrevs = Abbreviations::Default());

// Immutable collection of documents, in ingestion order.
class DocumentStore {
 public:
  DocumentStore() = default;

  // Throws Error on a duplicate id.
  void Add(Document doc);

  const Document *Find(std::string_view id) const;
  const std::vector<Document> &documents() const { return documents_; }
  size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }

 private:
  std::vector<Document> documents_;
  std::map<std::string, size_t, std::less<>> by_id_;
};

struct IngestResult {
  DocumentStore store;
  std::vector<LineError> errors;
};

// Reads a JSON Lines corpus ({"id","genre","text"} per line). Malformed lines
// are reported and skipped; a duplicate id throws Error.
IngestResult IngestDocuments(const std::string &path,
                             const Abbreviations &abbrevs = Abbreviations::Default());
IngestResult IngestDocumentsFromString(std::string_view jsonl,
                                       const Abbreviations &abbrevs = Abbreviations::Default());

}  // namespace slotfill

#endif  // SLOTFILL_CORPUS_H_
