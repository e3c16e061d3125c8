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

#ifndef SLOTFILL_RETRIEVAL_H_
#define SLOTFILL_RETRIEVAL_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slotfill/corpus.h"

namespace slotfill {

enum class EntityType { kPER, kORG, kGPE };

std::string_view EntityTypeName(EntityType type);
EntityType ParseEntityType(std::string_view name);

// BM25 parameters.
struct Bm25 {
  double k1 = 1.2;
  double b = 0.75;
};

struct Posting {
  std::string doc_id;
  int term_frequency = 0;
  bool operator==(const Posting &) const = default;
};

enum class MatchedQuery { kAndName, kAndAlias, kOrName };

std::string_view MatchedQueryName(MatchedQuery q);

struct RetrievalResult {
  std::string doc_id;
  double score = 0.0;
  MatchedQuery matched_query = MatchedQuery::kAndName;
};

// Lowercases and drops punctuation-only tokens; the analyzer used both for
// indexing and for query terms.
std::vector<std::string> AnalyzeText(std::string_view text);

class InvertedIndex {
 public:
  // Maximum documents returned per entity.
  static constexpr size_t kMaxDocsPerEntity = 100;

  InvertedIndex() = default;

  static InvertedIndex Build(const DocumentStore &store);

  // Documents containing every term, best BM25 first, ties by doc id.
  std::vector<RetrievalResult> QueryAnd(const std::vector<std::string> &terms) const;
  // Documents containing any term, same ordering.
  std::vector<RetrievalResult> QueryOr(const std::vector<std::string> &terms) const;

  // Union of AND(name), AND(alias) and, except for GPE, OR(name), in that
  // priority order, deduplicated and capped at kMaxDocsPerEntity.
  std::vector<RetrievalResult> RetrieveForEntity(std::string_view name,
                                                 const std::optional<std::string> &ir_alias,
                                                 EntityType type) const;

  const std::vector<Posting> *Postings(std::string_view term) const;
  const std::map<std::string, std::vector<Posting>, std::less<>> &postings() const {
    return postings_;
  }
  const std::map<std::string, int, std::less<>> &doc_lengths() const { return doc_lengths_; }
  size_t doc_count() const { return doc_lengths_.size(); }

  // JSON persistence: {"doc_lengths": {id: n}, "postings": {term: [[id, tf], ...]}}.
  std::string ToJson() const;
  static InvertedIndex FromJson(std::string_view json);

 private:
  double Score(const std::vector<std::string> &terms, const std::string &doc_id,
               const std::map<std::string, int> &tf) const;
  std::vector<RetrievalResult> Rank(const std::vector<std::string> &terms, bool conjunctive) const;
  void Finalize();

  std::map<std::string, std::vector<Posting>, std::less<>> postings_;
  std::map<std::string, int, std::less<>> doc_lengths_;
  double avg_doc_length_ = 0.0;
  Bm25 bm25_;
};

}  // namespace slotfill

#endif  // SLOTFILL_RETRIEVAL_H_
