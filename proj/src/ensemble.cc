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

#include "slotfill/ensemble.h"

#include "slotfill/util.h"

namespace slotfill {

std::string ClassifierName(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kPattern: return "pattern";
    case ClassifierKind::kSvm: return "svm";
    case ClassifierKind::kCnn: return "cnn";
    case ClassifierKind::kRnn: return "rnn";
  }
  return "";
}

ClassifierKind ParseClassifier(std::string_view name) {
  std::string n = ToLower(name);
  if (n == "pattern") return ClassifierKind::kPattern;
  if (n == "svm") return ClassifierKind::kSvm;
  if (n == "cnn") return ClassifierKind::kCnn;
  if (n == "rnn") return ClassifierKind::kRnn;
  throw Error("unknown classifier: " + std::string(name));
}

nlohmann::json InterpolationWeights::ToJson() const {
  return {{"pattern", pattern}, {"svm", svm}, {"cnn", cnn}, {"rnn", rnn}};
}

InterpolationWeights InterpolationWeights::FromJson(const nlohmann::json &j) {
  InterpolationWeights w{0, 0, 0, 0};
  for (const auto &[key, value] : j.items()) {
    double v = value.get<double>();
    if (!(v >= 0.0)) throw Error("interpolation weight '" + key + "' must be nonnegative");
    switch (ParseClassifier(key)) {
      case ClassifierKind::kPattern: w.pattern = v; break;
      case ClassifierKind::kSvm: w.svm = v; break;
      case ClassifierKind::kCnn: w.cnn = v; break;
      case ClassifierKind::kRnn: w.rnn = v; break;
    }
  }
  return w;
}

double CombineScores(const ScoreVector &scores, const InterpolationWeights &weights) {
  const std::pair<const std::optional<double> *, double> parts[] = {
      {&scores.pattern, weights.pattern},
      {&scores.svm, weights.svm},
      {&scores.cnn, weights.cnn},
      {&scores.rnn, weights.rnn},
  };
  double total = 0.0, sum = 0.0;
  bool any = false;
  for (const auto &[score, weight] : parts) {
    if (weight < 0.0) throw Error("interpolation weights must be nonnegative");
    if (!score->has_value()) continue;
    any = true;
    total += weight;
    sum += weight * **score;
  }
  if (!any) throw Error("no classifier score present");
  if (total == 0.0) throw Error("all interpolation weights of the present scores are zero");
  return sum / total;
}

const InterpolationWeights &WeightTable::For(std::string_view slot) const {
  auto it = per_slot_.find(slot);
  return it == per_slot_.end() ? global_ : it->second;
}

nlohmann::json WeightTable::ToJson() const {
  if (per_slot_.empty()) return global_.ToJson();
  nlohmann::json slots = nlohmann::json::object();
  for (const auto &[slot, w] : per_slot_) slots[slot] = w.ToJson();
  return {{"global", global_.ToJson()}, {"slots", slots}};
}

WeightTable WeightTable::FromJson(const nlohmann::json &j) {
  if (!j.is_object()) throw Error("weights must be a JSON object");
  if (!j.contains("global") && !j.contains("slots")) return WeightTable(InterpolationWeights::FromJson(j));
  WeightTable table;
  if (j.contains("global")) table.global_ = InterpolationWeights::FromJson(j.at("global"));
  if (j.contains("slots")) {
    for (const auto &[slot, w] : j.at("slots").items()) table.per_slot_[slot] = InterpolationWeights::FromJson(w);
  }
  return table;
}

WeightTable WeightTable::Load(const std::string &path) {
  try {
    return FromJson(nlohmann::json::parse(ReadFile(path)));
  } catch (const nlohmann::json::exception &e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace slotfill
