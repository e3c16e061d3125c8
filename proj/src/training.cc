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

#include "slotfill/training.h"

#include <algorithm>
#include <filesystem>

#include "slotfill/cnn.h"
#include "slotfill/rnn.h"

namespace slotfill {
namespace fs = std::filesystem;

namespace {

NeType ToNeType(EntityType t) {
  switch (t) {
    case EntityType::kPER: return NeType::kPER;
    case EntityType::kORG: return NeType::kORG;
    case EntityType::kGPE: return NeType::kGPE;
  }
  return NeType::kPER;
}

std::vector<LabeledContext> AsLabeledContexts(const std::vector<LabeledExample> &examples) {
  std::vector<LabeledContext> out;
  out.reserve(examples.size());
  for (const LabeledExample &e : examples) out.push_back({e.context, e.label});
  return out;
}

std::string Save(const fs::path &dir, const std::string &name, nlohmann::json j, const std::string &slot) {
  j["slot"] = slot;
  fs::path p = dir / name;
  WriteFile(p.string(), j.dump() + "\n");
  return p.string();
}

}  // namespace

NegativeSpec NegativeSpecFor(const SlotTable &slots, const std::string &canonical) {
  for (const std::string &name : slots.SlotsFor(canonical)) {
    const SlotConfig &c = slots.Get(name);
    if (c.swapped) continue;
    return {canonical, ToNeType(SlotTable::QueryEntityType(name)), c.filler_type};
  }
  throw Error("no non-inverse slot maps to '" + canonical + "'");
}

TrainingSet BuildTrainingSet(const Resources &resources, const std::string &train_dir,
                             const std::string &canonical, const SelectionConfig &selection) {
  fs::path root(train_dir);
  TrainingSet set;
  IngestResult corpus = IngestDocuments((root / "corpus.jsonl").string(), *resources.abbreviations);
  for (const LineError &e : corpus.errors) {
    set.warnings.push_back("training corpus line " + std::to_string(e.line) + ": " + e.message);
  }
  std::vector<RelationInstance> kb = LoadRelationInstances((root / "kb_instances.tsv").string());
  std::vector<LabeledExample> noisy = GeneratePositiveExamples(corpus.store, kb, canonical);
  set.positives = noisy.size();
  std::vector<LabeledExample> negatives = GenerateNegativeExamples(
      corpus.store, kb, NegativeSpecFor(resources.slots, canonical), *resources.tagger, resources.triggers);
  set.negatives = negatives.size();
  noisy.insert(noisy.end(), negatives.begin(), negatives.end());
  set.noisy = noisy.size();

  std::vector<LabeledExample> seed;
  for (LabeledExample &e : LoadExamples((root / "seed.jsonl").string())) {
    if (e.slot != canonical) continue;
    e.origin = ExampleOrigin::kSeed;
    seed.push_back(std::move(e));
  }
  if (seed.empty()) throw Error("no seed examples for slot '" + canonical + "'");
  SelectionResult selected = SelectTrainingData(noisy, seed, selection);
  set.warnings.insert(set.warnings.end(), selected.warnings.begin(), selected.warnings.end());
  set.examples = std::move(seed);
  set.examples.insert(set.examples.end(), selected.selected.begin(), selected.selected.end());
  return set;
}

std::vector<std::string> TrainAndSave(ClassifierKind kind, const std::string &canonical,
                                      const std::vector<LabeledExample> &examples,
                                      const ModelTraining &options, const std::string &model_dir) {
  if (examples.empty()) throw Error("no training examples for slot '" + canonical + "'");
  fs::path dir(model_dir);
  fs::create_directories(dir);
  const std::string stem = SlotFileStem(canonical);
  std::vector<std::string> written;
  std::optional<EmbeddingFile> embeddings;
  if (!options.embeddings_path.empty()) embeddings = EmbeddingFile::Load(options.embeddings_path);
  const EmbeddingFile *emb = embeddings ? &*embeddings : nullptr;

  std::vector<RelationContext> contexts;
  for (const LabeledExample &e : examples) contexts.push_back(e.context);

  switch (kind) {
    case ClassifierKind::kPattern: {
      PatternSet set;
      for (Pattern &p : LearnPatterns(AsPairs(examples), options.patterns)) set.Add(canonical, std::move(p));
      fs::path p = dir / (stem + ".patterns.tsv");
      WriteFile(p.string(), set.ToTsv());
      written.push_back(p.string());
      break;
    }
    case ClassifierKind::kSvm: {
      LinearModel model = SvmTrain(AsPairs(examples), options.svm);
      written.push_back(Save(dir, stem + ".svm.json", model.ToJson(), canonical));
      break;
    }
    case ClassifierKind::kCnn: {
      Rng rng(options.neural.seed);
      CnnModel model(BuildVocabulary(contexts), options.cnn, &rng, emb);
      Train(&model, AsLabeledContexts(examples), options.neural);
      written.push_back(Save(dir, stem + ".cnn.json", model.ToJson(), canonical));
      break;
    }
    case ClassifierKind::kRnn: {
      for (RnnVariant v : {RnnVariant::kUni, RnnVariant::kBi, RnnVariant::kMultitask}) {
        Rng rng(options.neural.seed);
        RnnModel model(BuildVocabulary(contexts), v, options.rnn, &rng, emb);
        Train(&model, AsLabeledContexts(examples), options.neural);
        written.push_back(Save(dir, stem + ".rnn-" + std::string(RnnVariantName(v)) + ".json",
                               model.ToJson(), canonical));
      }
      break;
    }
  }
  return written;
}

ScoreVector ScoreContext(const RelationContext &context, const std::vector<Pattern> &patterns,
                         const SlotModels *models, const std::vector<ClassifierKind> &enabled) {
  ScoreVector s;
  auto on = [&](ClassifierKind k) { return std::find(enabled.begin(), enabled.end(), k) != enabled.end(); };
  if (on(ClassifierKind::kPattern)) s.pattern = MatchPatterns(context, patterns);
  if (models == nullptr) return s;
  if (on(ClassifierKind::kSvm) && models->svm) s.svm = models->svm->Score(context);
  if (on(ClassifierKind::kCnn) && models->cnn) s.cnn = models->cnn->Predict(context);
  if (on(ClassifierKind::kRnn) && models->has_rnn()) {
    auto predict = [&](const std::optional<RnnModel> &m) -> std::optional<double> {
      if (!m) return std::nullopt;
      return m->Predict(context);
    };
    s.rnn = RnnEnsembleScore(predict(models->rnn_uni), predict(models->rnn_bi), predict(models->rnn_multitask));
  }
  return s;
}

WeightTuning TuneOnDev(const Resources &resources, const ModelStore &models,
                       const std::vector<LabeledExample> &dev, const std::string &model_dir,
                       std::vector<std::string> *warnings) {
  const std::vector<ClassifierKind> all = {ClassifierKind::kPattern, ClassifierKind::kSvm, ClassifierKind::kCnn,
                                           ClassifierKind::kRnn};
  std::map<std::string, std::vector<Pattern>> patterns;
  std::vector<DevCandidate> candidates;
  for (const LabeledExample &e : dev) {
    const SlotModels *m = models.Find(e.slot);
    if (m == nullptr) {
      if (warnings) warnings->push_back("dev example for untrained slot " + e.slot + " skipped");
      continue;
    }
    auto it = patterns.find(e.slot);
    if (it == patterns.end()) {
      std::vector<Pattern> list = resources.patterns.For(e.slot);
      const std::vector<Pattern> &learned = models.learned_patterns().For(e.slot);
      list.insert(list.end(), learned.begin(), learned.end());
      it = patterns.emplace(e.slot, std::move(list)).first;
    }
    candidates.push_back({e.slot, ScoreContext(e.context, it->second, m, all), e.label});
  }
  WeightTuning tuned = TuneInterpolationWeights(candidates, warnings);
  fs::create_directories(model_dir);
  WriteFile((fs::path(model_dir) / "weights.json").string(), WeightTable(tuned.weights).ToJson().dump(2) + "\n");
  WriteFile((fs::path(model_dir) / "thresholds.json").string(), ThresholdsToJson(tuned.thresholds).dump(2) + "\n");
  return tuned;
}

}  // namespace slotfill
