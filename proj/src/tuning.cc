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

#include "slotfill/tuning.h"

#include <algorithm>
#include <array>

#include "slotfill/util.h"

namespace slotfill {
namespace {

constexpr int kGridSteps = 100;
constexpr int kWeightSteps = 10;

double GridTheta(int i) { return i / static_cast<double>(kGridSteps); }

}  // namespace

Counts CountAt(const std::vector<ScoredExample> &dev, double theta) {
  Counts c;
  for (const ScoredExample &e : dev) {
    bool predicted = e.score >= theta;
    if (predicted && e.label == 1) ++c.tp;
    if (predicted && e.label == 0) ++c.fp;
    if (!predicted && e.label == 1) ++c.fn;
  }
  return c;
}

double F1Of(const Counts &c) {
  int denominator = 2 * c.tp + c.fp + c.fn;
  return denominator == 0 ? 0.0 : 2.0 * c.tp / denominator;
}

double TuneThreshold(const std::vector<ScoredExample> &dev, std::vector<std::string> *warnings) {
  bool positive = false, negative = false;
  for (const ScoredExample &e : dev) (e.label == 1 ? positive : negative) = true;
  if (!positive || !negative) {
    if (warnings) warnings->push_back("dev data lacks both labels; threshold defaults to 0.5");
    return kDefaultThreshold;
  }
  double best_theta = 0.0, best_f1 = -1.0;
  for (int i = 0; i <= kGridSteps; ++i) {
    double f1 = F1Of(CountAt(dev, GridTheta(i)));
    if (f1 > best_f1) {
      best_f1 = f1;
      best_theta = GridTheta(i);
    }
  }
  return best_theta;
}

WeightTuning TuneInterpolationWeights(const std::vector<DevCandidate> &dev, std::vector<std::string> *warnings) {
  // Order: pattern, svm, cnn, rnn.
  std::array<bool, 4> present{};
  std::map<std::string, std::vector<const DevCandidate *>> by_slot;
  for (const DevCandidate &c : dev) {
    present[0] = present[0] || c.scores.pattern.has_value();
    present[1] = present[1] || c.scores.svm.has_value();
    present[2] = present[2] || c.scores.cnn.has_value();
    present[3] = present[3] || c.scores.rnn.has_value();
    by_slot[c.slot].push_back(&c);
  }
  WeightTuning best;
  if (std::none_of(present.begin(), present.end(), [](bool p) { return p; })) {
    if (warnings) warnings->push_back("no dev scores; keeping default interpolation weights");
    return best;
  }
  best.f1 = -1.0;
  auto steps = [&](int k, int budget) { return present[k] ? budget : 0; };
  // Enumerated svm-major, then pattern, then cnn, each descending, so the
  // first point reaching the best F1 wins ties.
  for (int s = steps(1, kWeightSteps); s >= 0; --s) {
    for (int p = steps(0, kWeightSteps - s); p >= 0; --p) {
      for (int c = steps(2, kWeightSteps - s - p); c >= 0; --c) {
        int r = kWeightSteps - s - p - c;
        if (r > 0 && !present[3]) continue;
        InterpolationWeights w{p / 10.0, s / 10.0, c / 10.0, r / 10.0};
        Counts total;
        std::map<std::string, double> thresholds;
        for (const auto &[slot, candidates] : by_slot) {
          std::vector<ScoredExample> scored;
          for (const DevCandidate *cand : candidates) {
            scored.push_back({CombineScores(cand->scores, w), cand->label});
          }
          double theta = TuneThreshold(scored, nullptr);
          thresholds[slot] = theta;
          Counts counts = CountAt(scored, theta);
          total.tp += counts.tp;
          total.fp += counts.fp;
          total.fn += counts.fn;
        }
        double f1 = F1Of(total);
        if (f1 > best.f1) {
          best = {w, thresholds, f1};
        }
      }
    }
  }
  if (warnings) {
    for (const auto &[slot, candidates] : by_slot) {
      std::vector<ScoredExample> scored;
      for (const DevCandidate *cand : candidates) scored.push_back({0.0, cand->label});
      TuneThreshold(scored, warnings);
    }
  }
  return best;
}

nlohmann::json ThresholdsToJson(const std::map<std::string, double> &thresholds) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto &[slot, theta] : thresholds) j[slot] = theta;
  return j;
}

std::map<std::string, double> ThresholdsFromJson(const nlohmann::json &j) {
  std::map<std::string, double> out;
  for (const auto &[slot, theta] : j.items()) {
    double t = theta.get<double>();
    if (t < 0.0 || t > 1.0) throw Error("threshold for " + slot + " outside [0,1]");
    out[slot] = t;
  }
  return out;
}

}  // namespace slotfill
