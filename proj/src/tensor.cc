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

#include "slotfill/tensor.h"

#include <cmath>

#include "slotfill/util.h"

namespace slotfill {

Param &ParamSet::Add(std::string name, Matrix value, bool regularized) {
  if (Has(name)) throw Error("duplicate parameter " + name);
  Param p;
  p.name = std::move(name);
  p.grad = Matrix::Zero(value.rows(), value.cols());
  p.value = std::move(value);
  p.regularized = regularized;
  params_.push_back(std::move(p));
  return params_.back();
}

Param &ParamSet::Get(std::string_view name) {
  for (Param &p : params_) {
    if (p.name == name) return p;
  }
  throw Error("no parameter " + std::string(name));
}

const Param &ParamSet::Get(std::string_view name) const {
  for (const Param &p : params_) {
    if (p.name == name) return p;
  }
  throw Error("no parameter " + std::string(name));
}

bool ParamSet::Has(std::string_view name) const {
  for (const Param &p : params_) {
    if (p.name == name) return true;
  }
  return false;
}

void ParamSet::ZeroGrad() {
  for (Param &p : params_) p.grad.setZero();
}

double ParamSet::GradNorm() const {
  double sum = 0.0;
  for (const Param &p : params_) sum += p.grad.squaredNorm();
  return std::sqrt(sum);
}

void ParamSet::ScaleGrad(double factor) {
  for (Param &p : params_) p.grad *= factor;
}

bool ParamSet::AllFinite() const {
  for (const Param &p : params_) {
    if (!p.value.allFinite()) return false;
  }
  return true;
}

size_t ParamSet::Count() const {
  size_t n = 0;
  for (const Param &p : params_) n += static_cast<size_t>(p.value.size());
  return n;
}

nlohmann::json ParamSet::ToJson() const {
  nlohmann::json j = nlohmann::json::object();
  for (const Param &p : params_) {
    std::vector<double> data(p.value.data(), p.value.data() + p.value.size());
    j[p.name] = {{"rows", p.value.rows()}, {"cols", p.value.cols()}, {"data", std::move(data)}};
  }
  return j;
}

void ParamSet::LoadJson(const nlohmann::json &j) {
  for (Param &p : params_) {
    if (!j.contains(p.name)) throw Error("model file lacks tensor " + p.name);
    const nlohmann::json &t = j[p.name];
    auto rows = t.at("rows").get<Eigen::Index>();
    auto cols = t.at("cols").get<Eigen::Index>();
    if (rows != p.value.rows() || cols != p.value.cols()) {
      throw Error("tensor " + p.name + " has the wrong shape");
    }
    std::vector<double> data = t.at("data").get<std::vector<double>>();
    if (static_cast<Eigen::Index>(data.size()) != rows * cols) {
      throw Error("tensor " + p.name + " has the wrong size");
    }
    p.value = Eigen::Map<Matrix>(data.data(), rows, cols);
  }
}

Matrix GlorotUniform(Eigen::Index rows, Eigen::Index cols, Rng *rng) {
  double range = std::sqrt(6.0 / static_cast<double>(rows + cols));
  return UniformMatrix(rows, cols, range, rng);
}

Matrix UniformMatrix(Eigen::Index rows, Eigen::Index cols, double range, Rng *rng) {
  Matrix m(rows, cols);
  // Column-major fill order is part of the seed contract.
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = rng->Uniform(-range, range);
  }
  return m;
}

Vector Softmax(const Vector &logits) {
  Vector e = (logits.array() - logits.maxCoeff()).exp();
  return e / e.sum();
}

}  // namespace slotfill
