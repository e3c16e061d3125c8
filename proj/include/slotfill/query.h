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

#ifndef SLOTFILL_QUERY_H_
#define SLOTFILL_QUERY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slotfill/retrieval.h"
#include "slotfill/util.h"

namespace slotfill {

struct SlotQuery {
  std::string id;
  std::string entity_name;
  EntityType entity_type = EntityType::kPER;
  std::string slot;
  int hop = 0;
  // Second slot of a cold-start query; hop-0 fillers become its entities.
  std::optional<std::string> hop1_slot;
};

// JSON Lines: {"id", "name", "type", "slot", "hop"[, "hop1_slot"]}.
std::vector<SlotQuery> LoadQueries(const std::string &path);
std::vector<SlotQuery> ParseQueries(std::string_view jsonl);

// Unit-cost edit distance over bytes.
int Levenshtein(std::string_view a, std::string_view b);

struct RawAlias {
  std::string alias;
  // "PER", "ORG", "GPE", another NE label, or empty when untyped.
  std::string alias_type;
};

class AliasTable {
 public:
  // TSV: canonical<TAB>alias<TAB>alias_type
  static AliasTable Load(const std::string &path);
  void Add(const std::string &canonical, RawAlias alias);
  // Case-insensitive lookup by canonical name.
  std::vector<RawAlias> Lookup(std::string_view canonical) const;

 private:
  std::map<std::string, std::vector<RawAlias>> table_;
};

class NicknameTable {
 public:
  // TSV: name<TAB>nick
  static NicknameTable Load(const std::string &path);
  void Add(const std::string &name, const std::string &nick);
  std::vector<std::string> Lookup(std::string_view first_name) const;

 private:
  std::map<std::string, std::vector<std::string>> table_;
};

constexpr size_t kMinAliasLength = 2;

// Drops short aliases and aliases typed as another entity type, then adds
// company suffixes (ORG) or first-name nickname variants (PER).
std::vector<std::string> CleanAliases(std::string_view name, const std::vector<RawAlias> &raw,
                                      EntityType type, const NicknameTable &nicknames);

// The alias closest to `name` by edit distance (excluding `name` itself);
// ties go to the lexicographically smaller alias.
std::optional<std::string> SelectIrAlias(std::string_view name,
                                         const std::vector<std::string> &aliases);

// Bag of lowercased terms.
using TermBag = std::map<std::string, int>;

void AddTerms(std::string_view text, TermBag *bag);

struct KBEntry {
  std::string entity_id;
  std::string canonical_name;
  std::vector<std::string> aliases;
  TermBag description_terms;
};

// Small knowledge base used to resolve ambiguous names by description
// similarity (TF-IDF cosine).
class KnowledgeBase {
 public:
  // Ambiguity margin below which a document is kept.
  static constexpr double kLinkMargin = 0.05;

  KnowledgeBase() = default;
  explicit KnowledgeBase(std::vector<KBEntry> entries);

  // JSON Lines: {"id", "name", "aliases": [...], "description"}.
  static KnowledgeBase Load(const std::string &path);
  static KnowledgeBase Parse(std::string_view jsonl);

  // Entries whose name or an alias equals `name`, case-insensitively.
  std::vector<const KBEntry *> Candidates(std::string_view name) const;
  const KBEntry *Find(std::string_view entity_id) const;

  double Cosine(const TermBag &context, const KBEntry &entry) const;

  const std::vector<KBEntry> &entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  double Idf(const std::string &term) const;

  std::vector<KBEntry> entries_;
  std::map<std::string, int> document_frequency_;
};

// Resolves the query name to the best-matching KB entry for the given
// query-side context, or nullopt when no entry carries the name.
std::optional<std::string> LinkEntity(const SlotQuery &query, const KnowledgeBase &kb,
                                      const TermBag &query_context);

// Entity-linking gate for one document. Returns false only when another
// entry with the query's name beats every rival, the target included, by at
// least KnowledgeBase::kLinkMargin. Single candidates and close calls pass.
bool DocumentMatchesEntity(const TermBag &mention_context, const KBEntry &target,
                           const KnowledgeBase &kb, std::string_view name);

}  // namespace slotfill

#endif  // SLOTFILL_QUERY_H_
