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

#ifndef SLOTFILL_ENSEMBLE_H_
#define SLOTFILL_ENSEMBLE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace slotfill {

enum class ClassifierKind { kPattern, kSvm, kCnn, kRnn };

std::string ClassifierName(ClassifierKind kind);
ClassifierKind ParseClassifier(std::string_view name);

struct ScoreVector {
  std::optional<double> pattern;
  std::optional<double> svm;
  std::optional<double> cnn;
  std::optional<double> rnn;
  double combined = 0.0;
};

struct InterpolationWeights {
  double pattern = 0.2;
  double svm = 0.3;
  double cnn = 0.3;
  double rnn = 0.2;

  nlohmann::json ToJson() const;
  static InterpolationWeights FromJson(const nlohmann::json &j);
  bool operator==(const InterpolationWeights &other) const = default;
};

// Weighted sum over the present scores with their weights renormalized to
// sum 1. Throws when no score is present, a weight is negative, or the
// present weights are all zero.
double CombineScores(const ScoreVector &scores, const InterpolationWeights &weights);

// A global weight set with optional per-slot overrides. JSON is either a
// single {pattern, svm, cnn, rnn} object or {"global": {...}, "slots": {...}}.
class WeightTable {
 public:
  WeightTable() = default;
  explicit WeightTable(InterpolationWeights global) : global_(global) {}

  const InterpolationWeights &For(std::string_view slot) const;
  void SetGlobal(const InterpolationWeights &w) { global_ = w; }
  void SetSlot(const std::string &slot, const InterpolationWeights &w) { per_slot_[slot] = w; }
  const InterpolationWeights &global() const { return global_; }

  nlohmann::json ToJson() const;
  static WeightTable FromJson(const nlohmann::json &j);
  static WeightTable Load(const std::string &path);

 private:
  InterpolationWeights global_;
  std::map<std::string, InterpolationWeights, std::less<>> per_slot_;
};

}  // namespace slotfill

#endif  // SLOTFILL_ENSEMBLE_H_
