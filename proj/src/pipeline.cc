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

#include "slotfill/pipeline.h"

#include <algorithm>
#include <map>
#include <set>

#include "slotfill/extract.h"
#include "slotfill/training.h"

namespace slotfill {
namespace {

EntityType EntityTypeOf(NeType t) {
  switch (t) {
    case NeType::kPER: return EntityType::kPER;
    case NeType::kORG: return EntityType::kORG;
    case NeType::kGPE: return EntityType::kGPE;
    default: throw Error("filler type " + std::string(NeTypeName(t)) + " cannot start a second hop");
  }
}

TermBag SentenceContext(const Document &doc, const std::vector<Mention> &mentions) {
  TermBag bag;
  std::set<int> seen;
  for (const Mention &m : mentions) {
    if (m.kind != MentionKind::kExact || !seen.insert(m.sentence_index).second) continue;
    const Sentence &s = doc.sentences[m.sentence_index];
    AddTerms(s.Span(0, static_cast<int>(s.tokens.size())), &bag);
  }
  return bag;
}

std::vector<Mention> ExactMentions(const Document &doc, const std::string &name) {
  std::vector<Mention> out;
  for (Mention &m : FindNameMentions(doc, {name})) {
    if (m.kind == MentionKind::kExact) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

bool RunConfig::Uses(ClassifierKind kind) const {
  return std::find(classifiers.begin(), classifiers.end(), kind) != classifiers.end();
}

RunConfig ConfigureRun(int run_id) {
  using K = ClassifierKind;
  RunConfig c;
  c.run_id = run_id;
  switch (run_id) {
    case 1:
      c.classifiers = {K::kPattern, K::kSvm, K::kCnn};
      c.threshold_bonus = kHighPrecisionBonus;
      break;
    case 2: c.classifiers = {K::kPattern, K::kSvm, K::kCnn}; break;
    case 3: c.classifiers = {K::kPattern, K::kSvm, K::kCnn, K::kRnn}; break;
    case 4:
      c.classifiers = {K::kPattern, K::kSvm, K::kCnn};
      c.entity_linking = true;
      break;
    case 5: c.classifiers = {K::kPattern, K::kSvm}; break;
    default: throw Error("unknown run id " + std::to_string(run_id) + " (expected 1-5)");
  }
  return c;
}

SlotFiller::SlotFiller(const Resources &resources, const InvertedIndex &index, const ModelStore &models)
    : resources_(resources), index_(index), models_(models) {}

void SlotFiller::CheckModels(const std::string &slot, const RunConfig &config) const {
  const SlotConfig &sc = resources_.slots.Get(slot);
  if (sc.classifier_less) return;
  const SlotModels *m = models_.Find(sc.canonical_slot);
  std::vector<std::string> missing;
  if (config.Uses(ClassifierKind::kSvm) && (m == nullptr || !m->svm)) missing.push_back("svm");
  if (config.Uses(ClassifierKind::kCnn) && (m == nullptr || !m->cnn)) missing.push_back("cnn");
  if (config.Uses(ClassifierKind::kRnn) && (m == nullptr || !m->has_rnn())) missing.push_back("rnn");
  if (!missing.empty()) {
    throw Error("missing " + Join(missing, "/") + " model for slot " + slot + " (trained as " +
                sc.canonical_slot + ")");
  }
}

std::vector<Pattern> SlotFiller::PatternsFor(const std::string &canonical) const {
  std::vector<Pattern> list = resources_.patterns.For(canonical);
  const std::vector<Pattern> &learned = models_.learned_patterns().For(canonical);
  list.insert(list.end(), learned.begin(), learned.end());
  return list;
}

std::vector<RetrievalResult> SlotFiller::GateByEntityLinking(const SlotQuery &query,
                                                             std::vector<RetrievalResult> docs) const {
  if (resources_.kb.Candidates(query.entity_name).size() < 2) return docs;
  TermBag query_context;
  std::map<std::string, TermBag> doc_context;
  for (const RetrievalResult &r : docs) {
    const Document *doc = resources_.store.Find(r.doc_id);
    if (doc == nullptr) continue;
    TermBag bag = SentenceContext(*doc, ExactMentions(*doc, query.entity_name));
    for (const auto &[term, n] : bag) query_context[term] += n;
    doc_context[r.doc_id] = std::move(bag);
  }
  std::optional<std::string> target_id = LinkEntity(query, resources_.kb, query_context);
  if (!target_id) return docs;
  const KBEntry *target = resources_.kb.Find(*target_id);
  std::vector<RetrievalResult> kept;
  for (RetrievalResult &r : docs) {
    if (DocumentMatchesEntity(doc_context[r.doc_id], *target, resources_.kb, query.entity_name)) {
      kept.push_back(std::move(r));
    }
  }
  return kept;
}

std::vector<Answer> SlotFiller::RunQuery(const SlotQuery &query, const RunConfig &config) const {
  const SlotConfig &sc = resources_.slots.Get(query.slot);
  if (SlotTable::QueryEntityType(query.slot) != query.entity_type) {
    throw Error("query " + query.id + ": slot " + query.slot + " does not apply to a " +
                std::string(EntityTypeName(query.entity_type)));
  }
  CheckModels(query.slot, config);

  std::vector<std::string> aliases = CleanAliases(query.entity_name, resources_.aliases.Lookup(query.entity_name),
                                                  query.entity_type, resources_.nicknames);
  std::optional<std::string> ir_alias = SelectIrAlias(query.entity_name, aliases);
  std::vector<RetrievalResult> docs = index_.RetrieveForEntity(query.entity_name, ir_alias, query.entity_type);
  if (config.entity_linking) docs = GateByEntityLinking(query, std::move(docs));

  std::vector<std::string> names = {query.entity_name};
  for (const std::string &a : aliases) {
    if (ToLower(a) != ToLower(query.entity_name)) names.push_back(a);
  }
  const SlotModels *models = models_.Find(sc.canonical_slot);
  const std::vector<Pattern> patterns = PatternsFor(sc.canonical_slot);
  const WeightTable &weights = models_.weights();
  const double base = models_.Threshold(sc.canonical_slot).value_or(sc.threshold);
  const double threshold = EffectiveThreshold(base, query.hop, config.threshold_bonus);
  static const std::vector<CorefChain> kNoChains;

  std::vector<Answer> answers;
  for (const RetrievalResult &r : docs) {
    const Document *doc = resources_.store.Find(r.doc_id);
    if (doc == nullptr) continue;
    std::vector<Mention> mentions = FindNameMentions(*doc, names);
    if (mentions.empty()) continue;
    const std::vector<CorefChain> *chains = nullptr;
    if (config.coref_enabled) {
      auto it = resources_.coref.find(doc->id);
      chains = it == resources_.coref.end() ? &kNoChains : &it->second;
      std::vector<Mention> linked = AttachCorefMentions(*doc, *chains, mentions);
      std::vector<Mention> nominal = NominalAnaphoraHeuristic(*doc, mentions, *resources_.tagger);
      mentions.insert(mentions.end(), linked.begin(), linked.end());
      for (Mention &m : nominal) {
        bool dup = std::any_of(mentions.begin(), mentions.end(), [&](const Mention &o) { return o.SameSpan(m); });
        if (!dup) mentions.push_back(std::move(m));
      }
    }
    std::set<int> sentences;
    for (const Mention &m : mentions) sentences.insert(m.sentence_index);
    for (int si : sentences) {
      const Sentence &sentence = doc->sentences[si];
      std::vector<NESpan> spans = resources_.tagger->Tag(sentence);
      if (chains != nullptr && sc.filler_type == NeType::kPER) {
        for (NESpan &p : PronounPersonSpans(*doc, *chains, si)) {
          bool covered = std::any_of(spans.begin(), spans.end(), [&](const NESpan &s) { return s.Overlaps(p); });
          if (!covered) spans.push_back(std::move(p));
        }
      }
      for (const Candidate &c : CandidatesForSlot(*doc, sentence, mentions, spans, sc, chains, query.id)) {
        if (!FilterImpossible(c, sc)) continue;
        RelationContext context = sc.swapped ? SwapArguments(c.context) : c.context;
        ScoreVector scores;
        if (sc.classifier_less) {
          scores.pattern = MatchPatterns(context, patterns);
          scores.combined = *scores.pattern;
        } else {
          scores = ScoreContext(context, patterns, models, config.classifiers);
          scores.combined = CombineScores(scores, weights.For(sc.canonical_slot));
        }
        if (scores.combined < threshold) continue;

        Answer a;
        a.query_id = query.id;
        a.hop = query.hop;
        a.slot = query.slot;
        a.filler = c.canonical_filler;
        a.doc_id = doc->id;
        a.provenance.push_back({doc->id, si, c.entity_mention.token_start, c.entity_mention.token_end,
                                c.filler.token_start, c.filler.token_end});
        a.score = scores.combined;
        if (sc.validation.date) {
          std::optional<std::string> date = NormalizeDate(c.filler.surface);
          if (!date) continue;
          a.filler = *date;
        }
        if (sc.location != LocationGranularity::kNone) {
          LocationGranularity found = resources_.locations.Disambiguate(a.filler);
          if (found == LocationGranularity::kNone) continue;
          if (found != sc.location) {
            std::optional<Answer> inferred = InferLocation(a, found, sc.location, resources_.locations);
            if (!inferred) continue;
            a = std::move(*inferred);
          }
        }
        answers.push_back(std::move(a));
      }
    }
  }
  return RankAndTruncate(std::move(answers), sc);
}

std::vector<Answer> SlotFiller::RunColdStart(const SlotQuery &query, const RunConfig &config) const {
  std::optional<EntityType> hop1_type;
  if (query.hop1_slot) {
    const SlotConfig &first = resources_.slots.Get(query.slot);
    hop1_type = EntityTypeOf(first.filler_type);
    if (SlotTable::QueryEntityType(*query.hop1_slot) != *hop1_type) {
      throw Error("query " + query.id + ": hop-1 slot " + *query.hop1_slot + " does not take a " +
                  std::string(EntityTypeName(*hop1_type)) + " entity");
    }
    resources_.slots.Get(*query.hop1_slot);
  }
  SlotQuery hop0 = query;
  hop0.hop = 0;
  std::vector<Answer> answers = RunQuery(hop0, config);
  if (!query.hop1_slot) return answers;
  const size_t first_hop = answers.size();
  for (size_t i = 0; i < first_hop; ++i) {
    SlotQuery next;
    next.id = query.id;
    next.entity_name = answers[i].filler;
    next.entity_type = *hop1_type;
    next.slot = *query.hop1_slot;
    next.hop = 1;
    for (Answer &a : RunQuery(next, config)) {
      a.parent_filler = answers[i].filler;
      a.provenance.insert(a.provenance.begin(), answers[i].provenance.begin(), answers[i].provenance.end());
      answers.push_back(std::move(a));
    }
  }
  return answers;
}

std::string FormatAnswers(const std::vector<Answer> &answers) {
  std::string out;
  for (const Answer &a : answers) {
    out += a.query_id + "\t" + std::to_string(a.hop) + "\t" + a.slot + "\t" + a.filler + "\t" + a.doc_id + "\t" +
           FormatFixed(a.score, 4) + "\n";
  }
  return out;
}

}  // namespace slotfill
