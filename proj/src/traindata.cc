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

#include "slotfill/traindata.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"
#include "slotfill/tensor.h"

namespace slotfill {

std::vector<RelationInstance> ParseRelationInstances(std::string_view tsv) {
  std::vector<RelationInstance> out;
  int number = 0;
  for (const std::string &line : Split(tsv, '\n')) {
    ++number;
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 3) throw Error("kb line " + std::to_string(number) + ": expected 3 fields");
    RelationInstance r{Trim(f[0]), Trim(f[1]), Trim(f[2])};
    if (r.subject.empty() || r.relation.empty() || r.object.empty()) {
      throw Error("kb line " + std::to_string(number) + ": empty field");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RelationInstance> LoadRelationInstances(const std::string &path) {
  return ParseRelationInstances(ReadFile(path));
}

std::string_view OriginName(ExampleOrigin origin) {
  switch (origin) {
    case ExampleOrigin::kDistant: return "distant";
    case ExampleOrigin::kSeed: return "seed";
    case ExampleOrigin::kSelected: return "selected";
  }
  return "?";
}

std::vector<LabeledExample> ParseExamples(std::string_view jsonl) {
  std::vector<LabeledExample> out;
  int number = 0;
  for (const std::string &line : Split(jsonl, '\n')) {
    ++number;
    if (Trim(line).empty()) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      LabeledExample e;
      e.context.left = j.at("left").get<std::vector<std::string>>();
      e.context.middle = j.at("middle").get<std::vector<std::string>>();
      e.context.right = j.at("right").get<std::vector<std::string>>();
      e.context.entity_first = j.at("entity_first").get<bool>();
      e.label = j.at("label").get<int>();
      e.slot = j.at("slot").get<std::string>();
      std::string origin = j.value("origin", "distant");
      if (origin == "seed") {
        e.origin = ExampleOrigin::kSeed;
      } else if (origin == "selected") {
        e.origin = ExampleOrigin::kSelected;
      } else if (origin != "distant") {
        throw Error("unknown origin '" + origin + "'");
      }
      if (e.label != 0 && e.label != 1) throw Error("label must be 0 or 1");
      out.push_back(std::move(e));
    } catch (const std::exception &e) {
      throw Error("example line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<LabeledExample> LoadExamples(const std::string &path) { return ParseExamples(ReadFile(path)); }

std::string ExamplesToJsonl(const std::vector<LabeledExample> &examples) {
  std::string out;
  for (const LabeledExample &e : examples) {
    nlohmann::json j = {{"left", e.context.left},
                        {"middle", e.context.middle},
                        {"right", e.context.right},
                        {"entity_first", e.context.entity_first},
                        {"label", e.label},
                        {"slot", e.slot},
                        {"origin", OriginName(e.origin)}};
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<std::pair<int, int>> FindSurface(const std::vector<std::string> &words, std::string_view surface) {
  std::vector<std::string> needle;
  for (const Token &t : Tokenize(surface)) needle.push_back(ToLower(t.text));
  std::vector<std::pair<int, int>> spans;
  if (needle.empty() || needle.size() > words.size()) return spans;
  for (size_t i = 0; i + needle.size() <= words.size(); ++i) {
    bool match = true;
    for (size_t k = 0; k < needle.size() && match; ++k) match = ToLower(words[i + k]) == needle[k];
    if (match) spans.emplace_back(static_cast<int>(i), static_cast<int>(i + needle.size()));
  }
  return spans;
}

TriggerSet TriggerSet::Parse(std::string_view tsv) {
  TriggerSet set;
  int number = 0;
  for (const std::string &line : Split(tsv, '\n')) {
    ++number;
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 2) throw Error("trigger line " + std::to_string(number) + ": expected slot<TAB>trigger");
    set.Add(Trim(f[0]), Trim(f[1]));
  }
  return set;
}

TriggerSet TriggerSet::Load(const std::string &path) { return Parse(ReadFile(path)); }

void TriggerSet::Add(const std::string &slot, std::string_view trigger) {
  Trigger t;
  if (trigger.find("<ENTITY>") != std::string_view::npos || trigger.find("<FILLER>") != std::string_view::npos) {
    t.templates.push_back(Pattern::Parse(trigger));
  } else {
    t.phrase = std::string(trigger);
  }
  by_slot_[slot].push_back(std::move(t));
}

bool TriggerSet::Fires(std::string_view slot, const std::vector<std::string> &words,
                       const RelationContext &context) const {
  auto it = by_slot_.find(slot);
  if (it == by_slot_.end()) return false;
  for (const Trigger &t : it->second) {
    if (!t.templates.empty()) {
      if (t.templates[0].Matches(context)) return true;
    } else if (!FindSurface(words, t.phrase).empty()) {
      return true;
    }
  }
  return false;
}

std::vector<LabeledExample> GeneratePositiveExamples(const DocumentStore &store,
                                                     const std::vector<RelationInstance> &kb,
                                                     const std::string &relation) {
  std::vector<LabeledExample> out;
  for (const Document &doc : store.documents()) {
    for (const Sentence &sentence : doc.sentences) {
      std::vector<std::string> words = sentence.Words();
      for (const RelationInstance &r : kb) {
        if (r.relation != relation) continue;
        std::vector<std::pair<int, int>> subjects = FindSurface(words, r.subject);
        std::vector<std::pair<int, int>> objects = FindSurface(words, r.object);
        bool done = false;
        for (const auto &s : subjects) {
          for (const auto &o : objects) {
            if (s.first < o.second && o.first < s.second) continue;
            out.push_back({SplitContexts(words, s.first, s.second, o.first, o.second), 1,
                           ExampleOrigin::kDistant, relation});
            done = true;
            break;
          }
          if (done) break;
        }
      }
    }
  }
  return out;
}

std::vector<LabeledExample> GenerateNegativeExamples(const DocumentStore &store,
                                                     const std::vector<RelationInstance> &kb,
                                                     const NegativeSpec &spec,
                                                     const EntityTagger &tagger,
                                                     const TriggerSet &triggers) {
  std::set<std::pair<std::string, std::string>> known;
  for (const RelationInstance &r : kb) {
    if (r.relation == spec.relation) known.insert({ToLower(r.subject), ToLower(r.object)});
  }
  std::vector<LabeledExample> out;
  for (const Document &doc : store.documents()) {
    for (const Sentence &sentence : doc.sentences) {
      std::vector<NESpan> spans = tagger.Tag(sentence);
      std::vector<std::string> words = sentence.Words();
      for (const NESpan &e : spans) {
        if (e.ne_type != spec.entity_type) continue;
        for (const NESpan &f : spans) {
          if (f.ne_type != spec.filler_type || f.Overlaps(e)) continue;
          if (known.count({ToLower(e.surface), ToLower(f.surface)})) continue;
          RelationContext context = SplitContexts(words, e.token_start, e.token_end, f.token_start, f.token_end);
          if (triggers.Fires(spec.relation, words, context)) continue;
          out.push_back({std::move(context), 0, ExampleOrigin::kDistant, spec.relation});
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<RelationContext, int>> AsPairs(const std::vector<LabeledExample> &examples) {
  std::vector<std::pair<RelationContext, int>> out;
  out.reserve(examples.size());
  for (const LabeledExample &e : examples) out.emplace_back(e.context, e.label);
  return out;
}

SelectionResult SelectTrainingData(const std::vector<LabeledExample> &noisy,
                                   const std::vector<LabeledExample> &seed_data,
                                   const SelectionConfig &config) {
  if (seed_data.empty()) throw Error("selection needs a nonempty seed set");
  if (config.k < 1) throw Error("selection needs k >= 1");
  SelectionResult result;
  if (noisy.empty()) return result;
  size_t k = static_cast<size_t>(config.k);
  if (k > noisy.size()) {
    result.warnings.push_back("k=" + std::to_string(k) + " exceeds " + std::to_string(noisy.size()) +
                              " noisy examples; using k=" + std::to_string(noisy.size()));
    k = noisy.size();
  }
  std::vector<size_t> order(noisy.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(config.seed);
  rng.Shuffle(&order);

  std::vector<std::pair<RelationContext, int>> training = AsPairs(seed_data);
  for (size_t b = 0; b < k; ++b) {
    size_t begin = b * noisy.size() / k;
    size_t end = (b + 1) * noisy.size() / k;
    LinearModel model = SvmTrain(training, config.svm);
    std::vector<LabeledExample> kept;
    for (size_t i = begin; i < end; ++i) {
      const LabeledExample &e = noisy[order[i]];
      double score = model.Score(e.context);
      int predicted = score >= 0.5 ? 1 : 0;
      double confidence = std::max(score, 1.0 - score);
      if (predicted == e.label && confidence >= config.tau) {
        LabeledExample s = e;
        s.origin = ExampleOrigin::kSelected;
        kept.push_back(std::move(s));
      }
    }
    for (LabeledExample &e : kept) {
      training.emplace_back(e.context, e.label);
      result.selected.push_back(std::move(e));
    }
  }
  return result;
}

}  // namespace slotfill
