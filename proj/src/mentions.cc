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

#include "slotfill/mentions.h"

#include <algorithm>
#include <cstdlib>

#include "slotfill/query.h"

namespace slotfill {
namespace {

bool ParseInt(const std::string &s, int *out) {
  if (s.empty()) return false;
  char *end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (*end != '\0') return false;
  *out = static_cast<int>(v);
  return true;
}

bool IsPersonalPronoun(std::string_view w) {
  std::string lower = ToLower(w);
  return lower == "he" || lower == "she" || lower == "him";
}

Mention MakeMention(const Document &doc, int sentence, int start, int end, MentionKind kind) {
  Mention m;
  m.doc_id = doc.id;
  m.sentence_index = sentence;
  m.token_start = start;
  m.token_end = end;
  m.surface = doc.sentences[sentence].Span(start, end);
  m.kind = kind;
  return m;
}

void SortMentions(std::vector<Mention> *mentions) {
  std::sort(mentions->begin(), mentions->end(), [](const Mention &a, const Mention &b) {
    if (a.sentence_index != b.sentence_index) return a.sentence_index < b.sentence_index;
    if (a.token_start != b.token_start) return a.token_start < b.token_start;
    return a.token_end < b.token_end;
  });
}

}  // namespace

std::string_view MentionKindName(MentionKind kind) {
  switch (kind) {
    case MentionKind::kExact: return "exact";
    case MentionKind::kFuzzy: return "fuzzy";
    case MentionKind::kCoref: return "coref";
    case MentionKind::kNominalHeuristic: return "nominal_heuristic";
  }
  return "?";
}

MentionClass ParseMentionClass(std::string_view name) {
  if (name == "proper") return MentionClass::kProper;
  if (name == "pronoun") return MentionClass::kPronoun;
  if (name == "nominal") return MentionClass::kNominal;
  throw Error("unknown mention class '" + std::string(name) + "'");
}

CorefResource ParseCorefResource(std::string_view tsv, std::vector<std::string> *warnings) {
  CorefResource resource;
  CorefChain current;
  auto warn = [&](const std::string &msg) {
    if (warnings != nullptr) warnings->push_back(msg);
  };
  auto flush = [&]() {
    if (current.mentions.empty()) return;
    if (current.mentions.size() < 2) {
      warn("chain " + current.doc_id + "/" + current.chain_id + " has a single mention; skipped");
    } else {
      resource[current.doc_id].push_back(std::move(current));
    }
    current = CorefChain();
  };
  int number = 0;
  for (const std::string &line : Split(tsv, '\n')) {
    ++number;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (!f.empty() && !f.back().empty() && f.back().back() == '\r') f.back().pop_back();
    std::string where = "coref line " + std::to_string(number) + ": ";
    if (f.size() != 7) {
      warn(where + "expected 7 fields");
      continue;
    }
    ChainMention m;
    if (!ParseInt(f[2], &m.sentence_index) || !ParseInt(f[3], &m.token_start) ||
        !ParseInt(f[4], &m.token_end)) {
      warn(where + "non-integer index");
      continue;
    }
    if (m.sentence_index < 0 || m.token_start < 0 || m.token_end <= m.token_start) {
      warn(where + "invalid span");
      continue;
    }
    try {
      m.mention_class = ParseMentionClass(f[5]);
    } catch (const Error &e) {
      warn(where + e.what());
      continue;
    }
    m.surface = f[6];
    if (current.doc_id != f[0] || current.chain_id != f[1]) {
      flush();
      current.doc_id = f[0];
      current.chain_id = f[1];
    }
    current.mentions.push_back(std::move(m));
  }
  flush();
  return resource;
}

CorefResource LoadCorefResource(const std::string &path, std::vector<std::string> *warnings) {
  return ParseCorefResource(ReadFile(path), warnings);
}

bool ValidChainMention(const Document &doc, const ChainMention &m) {
  if (m.sentence_index < 0 || m.sentence_index >= static_cast<int>(doc.sentences.size())) {
    return false;
  }
  int length = static_cast<int>(doc.sentences[m.sentence_index].tokens.size());
  return m.token_start >= 0 && m.token_start < m.token_end && m.token_end <= length;
}

std::vector<Mention> FindNameMentions(const Document &doc, const std::vector<std::string> &names) {
  struct Pattern {
    std::string text;
    int tokens = 0;
  };
  std::vector<Pattern> patterns;
  for (const std::string &name : names) {
    std::vector<std::string> words;
    for (const Token &t : Tokenize(name)) words.push_back(ToLower(t.text));
    if (words.empty()) continue;
    patterns.push_back({Join(words, " "), static_cast<int>(words.size())});
  }

  std::vector<Mention> found;
  for (const Sentence &s : doc.sentences) {
    std::vector<std::string> lowered;
    for (const Token &t : s.tokens) lowered.push_back(ToLower(t.text));
    const int n = static_cast<int>(lowered.size());
    for (const Pattern &p : patterns) {
      for (int start = 0; start + p.tokens <= n; ++start) {
        std::string window = Join({lowered.begin() + start, lowered.begin() + start + p.tokens}, " ");
        const double longer = static_cast<double>(std::max(window.size(), p.text.size()));
        const double gap = std::abs(static_cast<double>(window.size()) - p.text.size());
        if (gap > kFuzzyThreshold * longer) continue;
        int d = Levenshtein(window, p.text);
        if (d > kFuzzyThreshold * longer) continue;
        found.push_back(MakeMention(doc, s.index, start, start + p.tokens,
                                    d == 0 ? MentionKind::kExact : MentionKind::kFuzzy));
      }
    }
  }

  // One mention per span, exact preferred; then drop spans nested in others.
  std::vector<Mention> unique;
  for (Mention &m : found) {
    auto it = std::find_if(unique.begin(), unique.end(),
                           [&](const Mention &u) { return u.SameSpan(m); });
    if (it == unique.end()) {
      unique.push_back(std::move(m));
    } else if (m.kind == MentionKind::kExact) {
      it->kind = MentionKind::kExact;
    }
  }
  std::vector<Mention> out;
  for (const Mention &m : unique) {
    bool nested = std::any_of(unique.begin(), unique.end(), [&](const Mention &o) {
      return !o.SameSpan(m) && o.sentence_index == m.sentence_index &&
             o.token_start <= m.token_start && m.token_end <= o.token_end;
    });
    if (!nested) out.push_back(m);
  }
  SortMentions(&out);
  return out;
}

std::vector<Mention> AttachCorefMentions(const Document &doc, const std::vector<CorefChain> &chains,
                                         const std::vector<Mention> &seed) {
  std::vector<Mention> added;
  for (const CorefChain &chain : chains) {
    if (chain.doc_id != doc.id) continue;
    bool pronoun_only = std::all_of(chain.mentions.begin(), chain.mentions.end(), [](const auto &m) {
      return m.mention_class == MentionClass::kPronoun;
    });
    if (pronoun_only) continue;
    bool anchored = std::any_of(chain.mentions.begin(), chain.mentions.end(), [&](const auto &cm) {
      return std::any_of(seed.begin(), seed.end(), [&](const Mention &s) {
        return s.Overlaps(cm.sentence_index, cm.token_start, cm.token_end);
      });
    });
    if (!anchored) continue;
    for (const ChainMention &cm : chain.mentions) {
      if (!ValidChainMention(doc, cm)) continue;
      Mention m = MakeMention(doc, cm.sentence_index, cm.token_start, cm.token_end,
                              MentionKind::kCoref);
      auto same = [&](const Mention &o) { return o.SameSpan(m); };
      if (std::any_of(seed.begin(), seed.end(), same)) continue;
      if (std::any_of(added.begin(), added.end(), same)) continue;
      added.push_back(std::move(m));
    }
  }
  SortMentions(&added);
  return added;
}

std::vector<Mention> NominalAnaphoraHeuristic(const Document &doc,
                                              const std::vector<Mention> &seed,
                                              const EntityTagger &tagger) {
  constexpr int kMaxModifierTokens = 3;
  constexpr int kFollowWindow = 3;
  std::vector<Mention> out;
  std::vector<int> sentences;
  for (const Mention &m : seed) sentences.push_back(m.sentence_index);
  std::sort(sentences.begin(), sentences.end());
  sentences.erase(std::unique(sentences.begin(), sentences.end()), sentences.end());

  for (int t : sentences) {
    if (t + 1 >= static_cast<int>(doc.sentences.size())) continue;
    const Sentence &next = doc.sentences[t + 1];
    const int n = static_cast<int>(next.tokens.size());
    if (n < 2 || ToLower(next.tokens[0].text) != "the") continue;

    int end = 0;
    for (int k = 1; k <= kMaxModifierTokens && k < n && end == 0; ++k) {
      std::string w = ToLower(next.tokens[k].text);
      auto has_suffix = [&](std::string_view suffix) {
        return w.size() > suffix.size() && EndsWith(w, suffix);
      };
      if (has_suffix("-year-old") || has_suffix("-born")) {
        end = k + 1;
      } else if (has_suffix("-based") && k + 1 < n && ToLower(next.tokens[k + 1].text) == "company") {
        end = k + 2;
      }
    }
    if (end == 0) continue;

    bool entity_follows = false;
    for (const NESpan &span : tagger.Tag(next)) {
      if (span.ne_type != NeType::kPER && span.ne_type != NeType::kORG) continue;
      if (span.token_start < end + kFollowWindow && span.token_end > end) entity_follows = true;
    }
    if (entity_follows) continue;

    Mention m = MakeMention(doc, t + 1, 0, end, MentionKind::kNominalHeuristic);
    auto same = [&](const Mention &o) { return o.SameSpan(m); };
    if (std::any_of(seed.begin(), seed.end(), same)) continue;
    out.push_back(std::move(m));
  }
  return out;
}

std::optional<std::string> ExpandPersonFiller(const Document &doc,
                                              const std::vector<CorefChain> &chains,
                                              int sentence_index, int token_start, int token_end) {
  for (const CorefChain &chain : chains) {
    if (chain.doc_id != doc.id) continue;
    const ChainMention *hit = nullptr;
    for (const ChainMention &cm : chain.mentions) {
      if (cm.sentence_index == sentence_index && cm.token_start < token_end &&
          token_start < cm.token_end && ValidChainMention(doc, cm)) {
        hit = &cm;
        break;
      }
    }
    if (hit == nullptr) continue;
    if (hit->mention_class == MentionClass::kProper) {
      return doc.sentences[sentence_index].Span(token_start, token_end);
    }
    const ChainMention *best = nullptr;
    for (const ChainMention &cm : chain.mentions) {
      if (cm.mention_class != MentionClass::kProper || !ValidChainMention(doc, cm)) continue;
      if (best == nullptr || cm.token_end - cm.token_start > best->token_end - best->token_start) {
        best = &cm;
      }
    }
    if (best == nullptr) return std::nullopt;
    return doc.sentences[best->sentence_index].Span(best->token_start, best->token_end);
  }
  return std::nullopt;
}

std::vector<NESpan> PronounPersonSpans(const Document &doc, const std::vector<CorefChain> &chains,
                                       int sentence_index) {
  std::vector<NESpan> out;
  for (const CorefChain &chain : chains) {
    if (chain.doc_id != doc.id) continue;
    bool has_proper = std::any_of(chain.mentions.begin(), chain.mentions.end(), [&](const auto &m) {
      return m.mention_class == MentionClass::kProper && ValidChainMention(doc, m);
    });
    if (!has_proper) continue;
    for (const ChainMention &cm : chain.mentions) {
      if (cm.sentence_index != sentence_index || cm.mention_class != MentionClass::kPronoun ||
          !ValidChainMention(doc, cm)) {
        continue;
      }
      std::string surface = doc.sentences[sentence_index].Span(cm.token_start, cm.token_end);
      if (!IsPersonalPronoun(surface)) continue;
      NESpan span;
      span.sentence_index = sentence_index;
      span.token_start = cm.token_start;
      span.token_end = cm.token_end;
      span.ne_type = NeType::kPER;
      span.surface = surface;
      out.push_back(std::move(span));
    }
  }
  return out;
}

}  // namespace slotfill
