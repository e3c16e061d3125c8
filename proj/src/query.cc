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

#include "slotfill/query.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "json.hpp"

namespace slotfill {

std::vector<SlotQuery> ParseQueries(std::string_view jsonl) {
  std::vector<SlotQuery> queries;
  int number = 0;
  for (const std::string &line : Split(jsonl, '\n')) {
    ++number;
    if (Trim(line).empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    auto where = "queries line " + std::to_string(number) + ": ";
    if (j.is_discarded() || !j.is_object()) throw Error(where + "not a JSON object");
    try {
      SlotQuery q;
      q.id = j.at("id").get<std::string>();
      q.entity_name = j.at("name").get<std::string>();
      q.entity_type = ParseEntityType(j.at("type").get<std::string>());
      q.slot = j.at("slot").get<std::string>();
      q.hop = j.value("hop", 0);
      if (j.contains("hop1_slot")) q.hop1_slot = j["hop1_slot"].get<std::string>();
      if (q.id.empty() || q.entity_name.empty()) throw Error("empty id or name");
      if (q.hop != 0 && q.hop != 1) throw Error("hop must be 0 or 1");
      queries.push_back(std::move(q));
    } catch (const std::exception &e) {
      throw Error(where + e.what());
    }
  }
  return queries;
}

std::vector<SlotQuery> LoadQueries(const std::string &path) { return ParseQueries(ReadFile(path)); }

int Levenshtein(std::string_view a, std::string_view b) {
  std::vector<int> prev(b.size() + 1), curr(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (size_t i = 0; i < a.size(); ++i) {
    curr[0] = static_cast<int>(i + 1);
    for (size_t j = 0; j < b.size(); ++j) {
      int substitution = prev[j] + (a[i] == b[j] ? 0 : 1);
      curr[j + 1] = std::min({prev[j + 1] + 1, curr[j] + 1, substitution});
    }
    prev.swap(curr);
  }
  return prev[b.size()];
}

AliasTable AliasTable::Load(const std::string &path) {
  AliasTable table;
  for (const TsvRow &row : ReadTsv(path)) {
    if (row.fields.size() < 2) {
      throw Error(path + ":" + std::to_string(row.line) + ": expected canonical<TAB>alias");
    }
    table.Add(row.fields[0], {row.fields[1], row.fields.size() > 2 ? row.fields[2] : ""});
  }
  return table;
}

void AliasTable::Add(const std::string &canonical, RawAlias alias) {
  table_[ToLower(canonical)].push_back(std::move(alias));
}

std::vector<RawAlias> AliasTable::Lookup(std::string_view canonical) const {
  auto it = table_.find(ToLower(canonical));
  return it == table_.end() ? std::vector<RawAlias>{} : it->second;
}

NicknameTable NicknameTable::Load(const std::string &path) {
  NicknameTable table;
  for (const TsvRow &row : ReadTsv(path)) {
    if (row.fields.size() < 2) {
      throw Error(path + ":" + std::to_string(row.line) + ": expected name<TAB>nick");
    }
    table.Add(row.fields[0], row.fields[1]);
  }
  return table;
}

void NicknameTable::Add(const std::string &name, const std::string &nick) {
  table_[ToLower(name)].push_back(nick);
}

std::vector<std::string> NicknameTable::Lookup(std::string_view first_name) const {
  auto it = table_.find(ToLower(first_name));
  return it == table_.end() ? std::vector<std::string>{} : it->second;
}

std::vector<std::string> CleanAliases(std::string_view name, const std::vector<RawAlias> &raw,
                                      EntityType type, const NicknameTable &nicknames) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto add = [&](std::string alias) {
    alias = Trim(alias);
    if (alias.size() < kMinAliasLength) return;
    if (seen.insert(alias).second) out.push_back(std::move(alias));
  };
  for (const RawAlias &a : raw) {
    std::string alias_type = Trim(a.alias_type);
    if (!alias_type.empty() && alias_type != "-" && alias_type != EntityTypeName(type)) continue;
    add(a.alias);
  }
  if (type == EntityType::kORG) {
    for (const char *suffix : {" Corp", " Co", " Inc"}) add(std::string(name) + suffix);
  } else if (type == EntityType::kPER) {
    std::vector<std::string> parts = SplitWhitespace(name);
    if (parts.size() >= 2) {
      std::vector<std::string> rest(parts.begin() + 1, parts.end());
      for (const std::string &nick : nicknames.Lookup(parts[0])) {
        add(nick + " " + Join(rest, " "));
      }
    }
  }
  return out;
}

std::optional<std::string> SelectIrAlias(std::string_view name,
                                         const std::vector<std::string> &aliases) {
  std::optional<std::string> best;
  int best_distance = std::numeric_limits<int>::max();
  for (const std::string &alias : aliases) {
    if (alias == name) continue;
    int d = Levenshtein(name, alias);
    if (d < best_distance || (d == best_distance && alias < *best)) {
      best = alias;
      best_distance = d;
    }
  }
  return best;
}

void AddTerms(std::string_view text, TermBag *bag) {
  for (std::string &term : AnalyzeText(text)) ++(*bag)[term];
}

KnowledgeBase::KnowledgeBase(std::vector<KBEntry> entries) : entries_(std::move(entries)) {
  std::set<std::string> ids;
  for (const KBEntry &e : entries_) {
    if (!ids.insert(e.entity_id).second) throw Error("duplicate KB id '" + e.entity_id + "'");
    if (e.description_terms.empty()) throw Error("KB entry '" + e.entity_id + "' has no description");
    for (const auto &[term, n] : e.description_terms) ++document_frequency_[term];
  }
}

KnowledgeBase KnowledgeBase::Parse(std::string_view jsonl) {
  std::vector<KBEntry> entries;
  int number = 0;
  for (const std::string &line : Split(jsonl, '\n')) {
    ++number;
    if (Trim(line).empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw Error("KB line " + std::to_string(number) + ": not a JSON object");
    }
    KBEntry e;
    e.entity_id = j.at("id").get<std::string>();
    e.canonical_name = j.at("name").get<std::string>();
    if (j.contains("aliases")) e.aliases = j["aliases"].get<std::vector<std::string>>();
    AddTerms(j.at("description").get<std::string>(), &e.description_terms);
    entries.push_back(std::move(e));
  }
  return KnowledgeBase(std::move(entries));
}

KnowledgeBase KnowledgeBase::Load(const std::string &path) { return Parse(ReadFile(path)); }

std::vector<const KBEntry *> KnowledgeBase::Candidates(std::string_view name) const {
  std::string lower = ToLower(name);
  std::vector<const KBEntry *> out;
  for (const KBEntry &e : entries_) {
    bool match = ToLower(e.canonical_name) == lower;
    for (const std::string &a : e.aliases) match = match || ToLower(a) == lower;
    if (match) out.push_back(&e);
  }
  return out;
}

const KBEntry *KnowledgeBase::Find(std::string_view entity_id) const {
  for (const KBEntry &e : entries_) {
    if (e.entity_id == entity_id) return &e;
  }
  return nullptr;
}

double KnowledgeBase::Idf(const std::string &term) const {
  auto it = document_frequency_.find(term);
  double df = it == document_frequency_.end() ? 0.0 : it->second;
  double n = static_cast<double>(entries_.size());
  return std::log((1.0 + n) / (1.0 + df)) + 1.0;
}

double KnowledgeBase::Cosine(const TermBag &context, const KBEntry &entry) const {
  double dot = 0.0, norm_context = 0.0, norm_entry = 0.0;
  for (const auto &[term, n] : context) {
    double w = n * Idf(term);
    norm_context += w * w;
    auto it = entry.description_terms.find(term);
    if (it != entry.description_terms.end()) dot += w * it->second * Idf(term);
  }
  for (const auto &[term, n] : entry.description_terms) {
    double w = n * Idf(term);
    norm_entry += w * w;
  }
  if (norm_context == 0.0 || norm_entry == 0.0) return 0.0;
  return dot / (std::sqrt(norm_context) * std::sqrt(norm_entry));
}

std::optional<std::string> LinkEntity(const SlotQuery &query, const KnowledgeBase &kb,
                                      const TermBag &query_context) {
  std::vector<const KBEntry *> candidates = kb.Candidates(query.entity_name);
  const KBEntry *best = nullptr;
  double best_score = -1.0;
  for (const KBEntry *e : candidates) {
    double score = kb.Cosine(query_context, *e);
    if (score > best_score || (score == best_score && e->entity_id < best->entity_id)) {
      best = e;
      best_score = score;
    }
  }
  if (best == nullptr) return std::nullopt;
  return best->entity_id;
}

bool DocumentMatchesEntity(const TermBag &mention_context, const KBEntry &target,
                           const KnowledgeBase &kb, std::string_view name) {
  std::vector<const KBEntry *> candidates = kb.Candidates(name);
  if (candidates.size() <= 1) return true;
  const KBEntry *best = nullptr;
  double best_score = -1.0, runner_up = -1.0;
  for (const KBEntry *e : candidates) {
    double score = kb.Cosine(mention_context, *e);
    if (score > best_score || (score == best_score && e->entity_id < best->entity_id)) {
      runner_up = best_score;
      best = e;
      best_score = score;
    } else if (score > runner_up) {
      runner_up = score;
    }
  }
  if (best->entity_id == target.entity_id) return true;
  return best_score - runner_up < KnowledgeBase::kLinkMargin;
}

}  // namespace slotfill
