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

#ifndef SLOTFILL_TUNING_H_
#define SLOTFILL_TUNING_H_

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "slotfill/ensemble.h"

namespace slotfill {

constexpr double kDefaultThreshold = 0.5;

struct ScoredExample {
  double score = 0.0;
  int label = 0;
};

struct Counts {
  int tp = 0;
  int fp = 0;
  int fn = 0;
};

// Counts when everything scoring >= theta is predicted positive.
Counts CountAt(const std::vector<ScoredExample> &dev, double theta);
double F1Of(const Counts &c);

// theta in {0.00, 0.01, ..., 1.00} maximizing dev F1; ties go to the smallest
// theta. Without both labels present, returns 0.5 and adds a warning.
double TuneThreshold(const std::vector<ScoredExample> &dev, std::vector<std::string> *warnings);

struct DevCandidate {
  std::string slot;
  ScoreVector scores;
  int label = 0;
};

struct WeightTuning {
  InterpolationWeights weights;
  std::map<std::string, double> thresholds;
  double f1 = 0.0;
};

// Grid over the 0.1 simplex of the classifiers present on dev (absent ones
// get weight 0). Each point is scored by micro F1 with per-slot thresholds
// tuned at that point. Ties prefer the larger svm weight, then pattern, then
// cnn.
WeightTuning TuneInterpolationWeights(const std::vector<DevCandidate> &dev,
                                      std::vector<std::string> *warnings);

// {"slot": theta, ...}
nlohmann::json ThresholdsToJson(const std::map<std::string, double> &thresholds);
std::map<std::string, double> ThresholdsFromJson(const nlohmann::json &j);

}  // namespace slotfill

#endif  // SLOTFILL_TUNING_H_
