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

#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "slotfill/pipeline.h"
#include "slotfill/resources.h"
#include "slotfill/retrieval.h"
#include "slotfill/training.h"

namespace fs = std::filesystem;
using namespace slotfill;

namespace {

void PrintWarnings(const std::vector<std::string> &warnings) {
  for (const std::string &w : warnings) std::cerr << "warning: " << w << "\n";
}

InvertedIndex LoadOrBuildIndex(const std::string &path, const Resources &resources) {
  if (!path.empty()) return InvertedIndex::FromJson(ReadFile(path));
  return InvertedIndex::Build(resources.store);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Cold-start slot filling"};
  app.require_subcommand(1);

  std::string data_dir = "data/mini";
  std::string model_dir = "models";
  std::string index_path;

  auto *index_cmd = app.add_subcommand("index", "Build the retrieval index");
  std::string index_out;
  index_cmd->add_option("--data", data_dir, "Data directory")->capture_default_str();
  index_cmd->add_option("--out", index_out, "Index file")->required();

  auto *train_cmd = app.add_subcommand("train", "Train one classifier for a slot");
  std::string slot, model_kind, train_dir, embeddings;
  int epochs = 50, k = 5;
  double tau = 0.8;
  train_cmd->add_option("--data", data_dir, "Data directory")->capture_default_str();
  train_cmd->add_option("--models", model_dir, "Model directory")->capture_default_str();
  train_cmd->add_option("--slot", slot, "Slot (inverse and merged slots map to their canonical slot)")->required();
  train_cmd->add_option("--model", model_kind, "pattern, svm, cnn or rnn")
      ->required()
      ->check(CLI::IsMember({"pattern", "svm", "cnn", "rnn"}));
  train_cmd->add_option("--train-dir", train_dir, "Training data (default <data>/train)");
  train_cmd->add_option("--epochs", epochs, "Neural training epochs")->capture_default_str();
  train_cmd->add_option("--batches", k, "Selection batches")->capture_default_str();
  train_cmd->add_option("--tau", tau, "Selection confidence threshold")->capture_default_str();
  train_cmd->add_option("--embeddings", embeddings, "Word embedding text file");

  auto *tune_cmd = app.add_subcommand("tune", "Tune interpolation weights and thresholds on dev data");
  std::string dev_path;
  tune_cmd->add_option("--data", data_dir, "Data directory")->capture_default_str();
  tune_cmd->add_option("--models", model_dir, "Model directory")->capture_default_str();
  tune_cmd->add_option("--dev", dev_path, "Dev examples (default <data>/train/dev.jsonl)");

  auto *run_cmd = app.add_subcommand("run", "Answer slot filling queries");
  std::string queries_path, out_path;
  int run_id = 2;
  bool no_coref = false;
  run_cmd->add_option("--data", data_dir, "Data directory")->capture_default_str();
  run_cmd->add_option("--models", model_dir, "Model directory")->capture_default_str();
  run_cmd->add_option("--index", index_path, "Prebuilt index (built in memory when omitted)");
  run_cmd->add_option("--queries", queries_path, "Queries JSON Lines")->required();
  run_cmd->add_option("--run", run_id, "Run configuration 1-5")->required()->check(CLI::Range(1, 5));
  run_cmd->add_flag("--no-coref", no_coref, "Disable coreference and nominal anaphora");
  run_cmd->add_option("--out", out_path, "Output TSV")->required();

  auto *score_cmd = app.add_subcommand("score", "Score system output against a gold key");
  std::string system_path, gold_path;
  score_cmd->add_option("--system", system_path, "System output TSV")->required();
  score_cmd->add_option("--gold", gold_path, "Gold TSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*index_cmd) {
      Resources resources = Resources::LoadDir(data_dir);
      PrintWarnings(resources.warnings);
      InvertedIndex index = InvertedIndex::Build(resources.store);
      WriteFile(index_out, index.ToJson());
      std::cout << "indexed " << index.doc_count() << " documents, " << index.postings().size() << " terms\n";
    } else if (*train_cmd) {
      Resources resources = Resources::LoadDir(data_dir);
      const uint64_t seed = SeedFromEnv(1);
      std::string canonical = resources.slots.Canonicalize(slot).first;
      if (ClassifierLessSlots().count(slot)) throw Error(slot + " is scored by patterns only");
      if (train_dir.empty()) train_dir = (fs::path(data_dir) / "train").string();
      SelectionConfig selection;
      selection.k = k;
      selection.tau = tau;
      selection.seed = seed;
      selection.svm.seed = seed;
      TrainingSet set = BuildTrainingSet(resources, train_dir, canonical, selection);
      PrintWarnings(set.warnings);
      ModelTraining options;
      options.neural.epochs = epochs;
      options.neural.seed = seed;
      options.svm.seed = seed;
      options.embeddings_path = embeddings;
      std::cout << canonical << ": " << set.positives << " distant positives, " << set.negatives
                << " negatives, " << set.examples.size() << " training examples after selection\n";
      for (const std::string &file :
           TrainAndSave(ParseClassifier(model_kind), canonical, set.examples, options, model_dir)) {
        std::cout << "wrote " << file << "\n";
      }
    } else if (*tune_cmd) {
      Resources resources = Resources::LoadDir(data_dir);
      ModelStore models = ModelStore::LoadDir(model_dir);
      if (dev_path.empty()) dev_path = (fs::path(data_dir) / "train" / "dev.jsonl").string();
      std::vector<std::string> warnings;
      WeightTuning tuned = TuneOnDev(resources, models, LoadExamples(dev_path), model_dir, &warnings);
      PrintWarnings(warnings);
      std::cout << "weights " << tuned.weights.ToJson().dump() << " dev F1 " << FormatFixed(100 * tuned.f1, 2)
                << "\n";
      for (const auto &[s, theta] : tuned.thresholds) std::cout << s << "\t" << FormatFixed(theta, 2) << "\n";
    } else if (*run_cmd) {
      Resources resources = Resources::LoadDir(data_dir);
      PrintWarnings(resources.warnings);
      ModelStore models = ModelStore::LoadDir(model_dir);
      InvertedIndex index = LoadOrBuildIndex(index_path, resources);
      RunConfig config = ConfigureRun(run_id);
      config.coref_enabled = !no_coref;
      SlotFiller filler(resources, index, models);
      std::vector<Answer> all;
      for (const SlotQuery &q : LoadQueries(queries_path)) {
        std::vector<Answer> answers = filler.RunColdStart(q, config);
        all.insert(all.end(), answers.begin(), answers.end());
      }
      WriteFile(out_path, FormatAnswers(all));
      std::cout << "wrote " << all.size() << " answers to " << out_path << "\n";
    } else if (*score_cmd) {
      EvalResult r = ScoreOutput(LoadOutputRows(system_path), LoadOutputRows(gold_path));
      std::cout << "P=" << FormatFixed(RoundPercent(r.precision), 2) << " R=" << FormatFixed(RoundPercent(r.recall), 2)
                << " F1=" << FormatFixed(RoundPercent(r.f1), 2) << " tp=" << r.counts.tp << " fp=" << r.counts.fp
                << " fn=" << r.counts.fn << "\n";
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
