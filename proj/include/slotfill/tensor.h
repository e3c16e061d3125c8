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

#ifndef SLOTFILL_TENSOR_H_
#define SLOTFILL_TENSOR_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

namespace slotfill {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Deterministic random source. Draws are derived from the raw engine output
// so results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Uniform integer in [0, n).
  size_t Index(size_t n) { return static_cast<size_t>(Uniform() * static_cast<double>(n)); }

  template <typename T>
  void Shuffle(std::vector<T> *v) {
    for (size_t i = v->size(); i > 1; --i) std::swap((*v)[i - 1], (*v)[Index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// A named trainable tensor with its gradient accumulator.
struct Param {
  std::string name;
  Matrix value;
  Matrix grad;
  // Weight matrices receive L2 decay; biases and embeddings do not.
  bool regularized = false;
};

class ParamSet {
 public:
  Param &Add(std::string name, Matrix value, bool regularized);
  Param &Get(std::string_view name);
  const Param &Get(std::string_view name) const;
  bool Has(std::string_view name) const;

  void ZeroGrad();
  double GradNorm() const;
  void ScaleGrad(double factor);
  bool AllFinite() const;
  size_t Count() const;

  std::vector<Param> &params() { return params_; }
  const std::vector<Param> &params() const { return params_; }

  nlohmann::json ToJson() const;
  // Replaces values of existing tensors; shapes must match.
  void LoadJson(const nlohmann::json &j);

 private:
  std::vector<Param> params_;
};

// Glorot-uniform matrix.
Matrix GlorotUniform(Eigen::Index rows, Eigen::Index cols, Rng *rng);
Matrix UniformMatrix(Eigen::Index rows, Eigen::Index cols, double range, Rng *rng);

// Softmax of a logit vector, computed stably.
Vector Softmax(const Vector &logits);

}  // namespace slotfill

#endif  // SLOTFILL_TENSOR_H_
