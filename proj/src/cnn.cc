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

#include "slotfill/cnn.h"

#include <cmath>

namespace slotfill {

CnnModel::CnnModel(Vocabulary vocab, const CnnDims &dims, Rng *rng, const EmbeddingFile *embeddings)
    : dims_(dims) {
  if (dims.embedding < 1 || dims.filters < 1 || dims.width < 1 || dims.hidden < 1) {
    throw Error("CNN dimensions must be positive");
  }
  vocab_ = std::move(vocab);
  const int d = dims.embedding, m = dims.filters, w = dims.width, h = dims.hidden;
  params_.Add("embeddings", InitEmbeddings(vocab_, d, embeddings, rng), false);
  params_.Add("conv_w", GlorotUniform(m, w * d, rng), true);
  params_.Add("conv_b", Matrix::Zero(m, 1), false);
  params_.Add("hidden_w", GlorotUniform(3 * m + 1, h, rng), true);
  params_.Add("hidden_b", Matrix::Zero(h, 1), false);
  params_.Add("output_w", GlorotUniform(h, 2, rng), true);
  params_.Add("output_b", Matrix::Zero(2, 1), false);
}

CnnModel CnnModel::FromJson(const nlohmann::json &j) {
  if (j.at("model").get<std::string>() != "cnn") throw Error("not a CNN model file");
  CnnDims dims;
  const nlohmann::json &c = j.at("dims");
  dims.embedding = c.at("embedding").get<int>();
  dims.filters = c.at("filters").get<int>();
  dims.width = c.at("width").get<int>();
  dims.hidden = c.at("hidden").get<int>();
  Rng rng(0);
  CnnModel model(Vocabulary(j.at("vocab").get<std::vector<std::string>>()), dims, &rng);
  model.params_.LoadJson(j.at("tensors"));
  return model;
}

nlohmann::json CnnModel::ToJson() const {
  return {{"model", "cnn"},
          {"dims",
           {{"embedding", dims_.embedding},
            {"filters", dims_.filters},
            {"width", dims_.width},
            {"hidden", dims_.hidden}}},
          {"vocab", vocab_.words()},
          {"tensors", params_.ToJson()}};
}

Vector CnnModel::Window(const Segment &s, int position) const {
  const int d = dims_.embedding;
  const Matrix &emb = params_.Get("embeddings").value;
  Vector x = Vector::Zero(dims_.width * d);
  for (int k = 0; k < dims_.width; ++k) {
    int id = s.ids[position + k];
    if (id >= 0) x.segment(k * d, d) = emb.row(id).transpose();
  }
  return x;
}

CnnModel::Segment CnnModel::RunSegment(const std::vector<std::string> &words) const {
  Segment s;
  s.ids = vocab_.Indices(words);
  while (static_cast<int>(s.ids.size()) < dims_.width) s.ids.push_back(-1);
  const int positions = static_cast<int>(s.ids.size()) - dims_.width + 1;
  const Matrix &conv_w = params_.Get("conv_w").value;
  const Matrix &conv_b = params_.Get("conv_b").value;
  s.activations.resize(dims_.filters, positions);
  for (int p = 0; p < positions; ++p) {
    s.activations.col(p) = (conv_w * Window(s, p) + conv_b.col(0)).array().tanh();
  }
  s.pooled.resize(dims_.filters);
  s.argmax.assign(dims_.filters, 0);
  for (int f = 0; f < dims_.filters; ++f) {
    Eigen::Index best;
    s.pooled[f] = s.activations.row(f).maxCoeff(&best);
    s.argmax[f] = static_cast<int>(best);
  }
  return s;
}

Vector CnnModel::PoolSegment(const std::vector<std::string> &words) const {
  return RunSegment(words).pooled;
}

CnnModel::Forward CnnModel::Run(const RelationContext &context) const {
  Forward fw;
  fw.segments[0] = RunSegment(context.left);
  fw.segments[1] = RunSegment(context.middle);
  fw.segments[2] = RunSegment(context.right);
  const int m = dims_.filters;
  fw.features.resize(3 * m + 1);
  for (int i = 0; i < 3; ++i) fw.features.segment(i * m, m) = fw.segments[i].pooled;
  fw.features[3 * m] = context.entity_first ? 1.0 : 0.0;
  const Matrix &hidden_w = params_.Get("hidden_w").value;
  const Matrix &hidden_b = params_.Get("hidden_b").value;
  fw.hidden = (hidden_w.transpose() * fw.features + hidden_b.col(0)).array().tanh();
  const Matrix &output_w = params_.Get("output_w").value;
  const Matrix &output_b = params_.Get("output_b").value;
  fw.probs = Softmax(output_w.transpose() * fw.hidden + output_b.col(0));
  return fw;
}

double CnnModel::Predict(const RelationContext &context) const { return Run(context).probs[1]; }

double CnnModel::Loss(const RelationContext &context, int label) const {
  return -std::log(Run(context).probs[label]);
}

double CnnModel::Accumulate(const RelationContext &context, int label, double scale) {
  Forward fw = Run(context);
  const int m = dims_.filters, d = dims_.embedding;

  Vector dlogits = fw.probs;
  dlogits[label] -= 1.0;
  dlogits *= scale;

  Param &output_w = params_.Get("output_w");
  output_w.grad += fw.hidden * dlogits.transpose();
  params_.Get("output_b").grad.col(0) += dlogits;
  Vector dhidden = output_w.value * dlogits;
  Vector dpre = dhidden.array() * (1.0 - fw.hidden.array().square());

  Param &hidden_w = params_.Get("hidden_w");
  hidden_w.grad += fw.features * dpre.transpose();
  params_.Get("hidden_b").grad.col(0) += dpre;
  Vector dfeatures = hidden_w.value * dpre;

  Param &conv_w = params_.Get("conv_w");
  Param &conv_b = params_.Get("conv_b");
  Param &emb = params_.Get("embeddings");
  for (int i = 0; i < 3; ++i) {
    const Segment &s = fw.segments[i];
    for (int f = 0; f < m; ++f) {
      const int p = s.argmax[f];
      const double a = s.activations(f, p);
      const double dconv = dfeatures[i * m + f] * (1.0 - a * a);
      if (dconv == 0.0) continue;
      conv_w.grad.row(f) += dconv * Window(s, p).transpose();
      conv_b.grad(f, 0) += dconv;
      for (int k = 0; k < dims_.width; ++k) {
        int id = s.ids[p + k];
        if (id >= 0) emb.grad.row(id) += dconv * conv_w.value.row(f).segment(k * d, d);
      }
    }
  }
  return -std::log(fw.probs[label]);
}

}  // namespace slotfill
