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

#include "slotfill/resources.h"

#include <algorithm>
#include <filesystem>

#include "json.hpp"
#include "slotfill/tuning.h"

namespace slotfill {
namespace fs = std::filesystem;

namespace {

bool Exists(const fs::path &p) { return fs::exists(p); }

nlohmann::json ReadJson(const fs::path &p) {
  try {
    return nlohmann::json::parse(ReadFile(p.string()));
  } catch (const nlohmann::json::exception &e) {
    throw Error(p.string() + ": " + e.what());
  }
}

}  // namespace

Resources Resources::LoadDir(const std::string &dir) {
  fs::path root(dir);
  Resources r;
  r.dir = dir;
  r.abbreviations = std::make_unique<Abbreviations>(Exists(root / "abbreviations.txt")
                                                        ? Abbreviations::Load((root / "abbreviations.txt").string())
                                                        : Abbreviations::Default());
  r.slots = SlotTable::Load((root / "slots.json").string());
  IngestResult ingest = IngestDocuments((root / "corpus.jsonl").string(), *r.abbreviations);
  r.store = std::move(ingest.store);
  r.ingest_errors = std::move(ingest.errors);
  for (const LineError &e : r.ingest_errors) {
    r.warnings.push_back("corpus line " + std::to_string(e.line) + ": " + e.message);
  }
  if (Exists(root / "aliases.tsv")) r.aliases = AliasTable::Load((root / "aliases.tsv").string());
  if (Exists(root / "nicknames.tsv")) r.nicknames = NicknameTable::Load((root / "nicknames.tsv").string());
  if (Exists(root / "kb.jsonl")) r.kb = KnowledgeBase::Load((root / "kb.jsonl").string());
  if (Exists(root / "coref.tsv")) r.coref = LoadCorefResource((root / "coref.tsv").string(), &r.warnings);
  if (Exists(root / "gazetteers")) r.gazetteers = Gazetteers::LoadDir((root / "gazetteers").string());
  r.tagger = std::make_unique<EntityTagger>(r.gazetteers);
  if (Exists(root / "patterns.tsv")) r.patterns = PatternSet::Load((root / "patterns.tsv").string());
  if (Exists(root / "triggers.tsv")) r.triggers = TriggerSet::Load((root / "triggers.tsv").string());
  if (Exists(root / "locations")) r.locations = LocationMaps::LoadDir((root / "locations").string());
  return r;
}

std::string SlotFileStem(std::string_view slot) {
  std::string stem(slot);
  std::replace(stem.begin(), stem.end(), ':', '_');
  std::replace(stem.begin(), stem.end(), '/', '_');
  return stem;
}

ModelStore ModelStore::LoadDir(const std::string &dir) {
  ModelStore store;
  fs::path root(dir);
  if (!fs::is_directory(root)) throw Error("model directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(root)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const fs::path &p : files) {
    std::string name = p.filename().string();
    if (name == "weights.json") {
      store.weights_ = WeightTable::FromJson(ReadJson(p));
      continue;
    }
    if (name == "thresholds.json") {
      for (const auto &[slot, t] : ThresholdsFromJson(ReadJson(p))) store.thresholds_[slot] = t;
      continue;
    }
    if (EndsWith(name, ".patterns.tsv")) {
      store.patterns_.Merge(PatternSet::Load(p.string()));
      continue;
    }
    if (!EndsWith(name, ".json")) continue;
    nlohmann::json j = ReadJson(p);
    if (!j.is_object() || !j.contains("model")) continue;
    std::string slot = j.value("slot", "");
    if (slot.empty()) throw Error(p.string() + ": model file without slot");
    SlotModels &m = store.models_[slot];
    std::string kind = j.at("model").get<std::string>();
    try {
      if (kind == "svm") {
        m.svm = LinearModel::FromJson(j);
      } else if (kind == "cnn") {
        m.cnn = CnnModel::FromJson(j);
      } else if (kind == "rnn") {
        RnnModel rnn = RnnModel::FromJson(j);
        switch (rnn.variant()) {
          case RnnVariant::kUni: m.rnn_uni = std::move(rnn); break;
          case RnnVariant::kBi: m.rnn_bi = std::move(rnn); break;
          case RnnVariant::kMultitask: m.rnn_multitask = std::move(rnn); break;
        }
      } else {
        throw Error("unknown model kind '" + kind + "'");
      }
    } catch (const nlohmann::json::exception &e) {
      throw Error(p.string() + ": " + e.what());
    }
  }
  return store;
}

const SlotModels *ModelStore::Find(std::string_view canonical_slot) const {
  auto it = models_.find(canonical_slot);
  return it == models_.end() ? nullptr : &it->second;
}

std::optional<double> ModelStore::Threshold(std::string_view canonical_slot) const {
  auto it = thresholds_.find(canonical_slot);
  if (it == thresholds_.end()) return std::nullopt;
  return it->second;
}

}  // namespace slotfill
