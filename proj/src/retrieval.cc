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

#include "slotfill/retrieval.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"

namespace slotfill {

std::string_view EntityTypeName(EntityType type) {
  switch (type) {
    case EntityType::kPER: return "PER";
    case EntityType::kORG: return "ORG";
    case EntityType::kGPE: return "GPE";
  }
  return "?";
}

EntityType ParseEntityType(std::string_view name) {
  if (name == "PER") return EntityType::kPER;
  if (name == "ORG") return EntityType::kORG;
  if (name == "GPE") return EntityType::kGPE;
  throw Error("unknown entity type '" + std::string(name) + "'");
}

std::string_view MatchedQueryName(MatchedQuery q) {
  switch (q) {
    case MatchedQuery::kAndName: return "and_name";
    case MatchedQuery::kAndAlias: return "and_alias";
    case MatchedQuery::kOrName: return "or_name";
  }
  return "?";
}

std::vector<std::string> AnalyzeText(std::string_view text) {
  std::vector<std::string> terms;
  for (const Token &t : Tokenize(text)) {
    if (!IsPunctuation(t.text)) terms.push_back(ToLower(t.text));
  }
  return terms;
}

InvertedIndex InvertedIndex::Build(const DocumentStore &store) {
  InvertedIndex index;
  for (const Document &doc : store.documents()) {
    std::map<std::string, int> counts;
    int length = 0;
    for (const Sentence &s : doc.sentences) {
      for (const Token &t : s.tokens) {
        if (IsPunctuation(t.text)) continue;
        ++counts[ToLower(t.text)];
        ++length;
      }
    }
    index.doc_lengths_[doc.id] = length;
    for (const auto &[term, tf] : counts) index.postings_[term].push_back({doc.id, tf});
  }
  index.Finalize();
  return index;
}

void InvertedIndex::Finalize() {
  for (auto &[term, list] : postings_) {
    std::sort(list.begin(), list.end(),
              [](const Posting &a, const Posting &b) { return a.doc_id < b.doc_id; });
  }
  double total = 0.0;
  for (const auto &[id, n] : doc_lengths_) total += n;
  avg_doc_length_ = doc_lengths_.empty() ? 0.0 : total / doc_lengths_.size();
}

const std::vector<Posting> *InvertedIndex::Postings(std::string_view term) const {
  auto it = postings_.find(term);
  return it == postings_.end() ? nullptr : &it->second;
}

double InvertedIndex::Score(const std::vector<std::string> &terms, const std::string &doc_id,
                            const std::map<std::string, int> &tf) const {
  const double n_docs = static_cast<double>(doc_count());
  const double length = doc_lengths_.find(doc_id)->second;
  const double norm = avg_doc_length_ > 0 ? length / avg_doc_length_ : 0.0;
  double score = 0.0;
  for (const std::string &term : terms) {
    auto it = tf.find(term);
    if (it == tf.end()) continue;
    const double df = static_cast<double>(Postings(term)->size());
    // Robertson-Sparck Jones idf with +1 inside the log keeps it positive.
    const double idf = std::log(1.0 + (n_docs - df + 0.5) / (df + 0.5));
    const double f = it->second;
    score += idf * f * (bm25_.k1 + 1.0) / (f + bm25_.k1 * (1.0 - bm25_.b + bm25_.b * norm));
  }
  return score;
}

std::vector<RetrievalResult> InvertedIndex::Rank(const std::vector<std::string> &raw_terms,
                                                 bool conjunctive) const {
  // Duplicate query terms count once.
  std::vector<std::string> terms;
  for (const std::string &t : raw_terms) {
    std::string lower = ToLower(t);
    if (std::find(terms.begin(), terms.end(), lower) == terms.end()) terms.push_back(lower);
  }
  if (terms.empty()) return {};

  // doc id -> (term -> tf)
  std::map<std::string, std::map<std::string, int>> hits;
  for (const std::string &term : terms) {
    const std::vector<Posting> *list = Postings(term);
    if (list == nullptr) {
      if (conjunctive) return {};
      continue;
    }
    for (const Posting &p : *list) hits[p.doc_id][term] = p.term_frequency;
  }

  std::vector<RetrievalResult> results;
  for (const auto &[doc_id, tf] : hits) {
    if (conjunctive && tf.size() != terms.size()) continue;
    results.push_back({doc_id, Score(terms, doc_id, tf), MatchedQuery::kAndName});
  }
  std::sort(results.begin(), results.end(), [](const RetrievalResult &a, const RetrievalResult &b) {
    if (a.score != b.score) return a.score > b.score;
    return a.doc_id < b.doc_id;
  });
  return results;
}

std::vector<RetrievalResult> InvertedIndex::QueryAnd(const std::vector<std::string> &terms) const {
  return Rank(terms, true);
}

std::vector<RetrievalResult> InvertedIndex::QueryOr(const std::vector<std::string> &terms) const {
  std::vector<RetrievalResult> results = Rank(terms, false);
  for (RetrievalResult &r : results) r.matched_query = MatchedQuery::kOrName;
  return results;
}

std::vector<RetrievalResult> InvertedIndex::RetrieveForEntity(
    std::string_view name, const std::optional<std::string> &ir_alias, EntityType type) const {
  std::vector<RetrievalResult> out;
  std::set<std::string> seen;
  auto add = [&](std::vector<RetrievalResult> tier, MatchedQuery kind) {
    for (RetrievalResult &r : tier) {
      if (out.size() >= kMaxDocsPerEntity) return;
      if (!seen.insert(r.doc_id).second) continue;
      r.matched_query = kind;
      out.push_back(std::move(r));
    }
  };
  std::vector<std::string> name_terms = AnalyzeText(name);
  if (name_terms.empty()) return out;
  add(QueryAnd(name_terms), MatchedQuery::kAndName);
  if (ir_alias.has_value()) {
    std::vector<std::string> alias_terms = AnalyzeText(*ir_alias);
    if (!alias_terms.empty()) add(QueryAnd(alias_terms), MatchedQuery::kAndAlias);
  }
  if (type != EntityType::kGPE) add(QueryOr(name_terms), MatchedQuery::kOrName);
  return out;
}

std::string InvertedIndex::ToJson() const {
  nlohmann::json j;
  j["doc_lengths"] = nlohmann::json::object();
  for (const auto &[id, n] : doc_lengths_) j["doc_lengths"][id] = n;
  j["postings"] = nlohmann::json::object();
  for (const auto &[term, list] : postings_) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Posting &p : list) arr.push_back({p.doc_id, p.term_frequency});
    j["postings"][term] = std::move(arr);
  }
  return j.dump();
}

InvertedIndex InvertedIndex::FromJson(std::string_view json) {
  nlohmann::json j = nlohmann::json::parse(json, nullptr, false);
  if (j.is_discarded() || !j.contains("doc_lengths") || !j.contains("postings")) {
    throw Error("malformed index file");
  }
  InvertedIndex index;
  for (const auto &[id, n] : j["doc_lengths"].items()) index.doc_lengths_[id] = n.get<int>();
  for (const auto &[term, arr] : j["postings"].items()) {
    std::vector<Posting> &list = index.postings_[term];
    for (const auto &p : arr) {
      std::string id = p.at(0).get<std::string>();
      if (index.doc_lengths_.count(id) == 0) throw Error("posting for unknown document " + id);
      list.push_back({id, p.at(1).get<int>()});
    }
  }
  index.Finalize();
  return index;
}

}  // namespace slotfill
