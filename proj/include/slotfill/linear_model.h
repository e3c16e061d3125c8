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

#ifndef SLOTFILL_LINEAR_MODEL_H_
#define SLOTFILL_LINEAR_MODEL_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "slotfill/extract.h"

namespace slotfill {

constexpr int kDefaultHashBits = 18;

// Feature strings before hashing: L:/M:/R: unigrams, MB: middle bigrams,
// the argument order flag and the middle length bucket.
std::vector<std::string> FeatureNames(const RelationContext &context);

// "0", "1", "2", "3-5" or "6+".
std::string LengthBucket(size_t middle_length);

using SparseVector = std::vector<std::pair<uint32_t, double>>;

// Hashed counts, sorted by index.
SparseVector Featurize(const RelationContext &context, int bits = kDefaultHashBits);

struct SvmConfig {
  int epochs = 30;
  double learning_rate = 0.05;
  double l2 = 1e-4;
  // Hinge target. Scores are logistic(margin), so a unit margin would cap
  // confident training points near 0.73.
  double margin = 3.0;
  uint64_t seed = 1;
  int bits = kDefaultHashBits;
};

class LinearModel {
 public:
  explicit LinearModel(int bits = kDefaultHashBits);

  double Margin(const SparseVector &x) const;
  double Margin(const RelationContext &context) const;
  // logistic(margin), in (0, 1).
  double Score(const RelationContext &context) const;

  int bits() const { return bits_; }
  std::vector<double> &weights() { return weights_; }
  const std::vector<double> &weights() const { return weights_; }
  double &bias() { return bias_; }
  double bias() const { return bias_; }

  nlohmann::json ToJson() const;
  static LinearModel FromJson(const nlohmann::json &j);
  void Save(const std::string &path) const;
  static LinearModel Load(const std::string &path);

 private:
  int bits_;
  std::vector<double> weights_;
  double bias_ = 0.0;
};

// Hinge loss with L2 by SGD. Throws on an empty set or labels outside {0,1}.
LinearModel SvmTrain(const std::vector<std::pair<RelationContext, int>> &data,
                     const SvmConfig &config = {});

double Logistic(double x);

}  // namespace slotfill

#endif  // SLOTFILL_LINEAR_MODEL_H_
