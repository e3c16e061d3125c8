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

#include "slotfill/rnn.h"

#include <cmath>

namespace slotfill {

std::string_view RnnVariantName(RnnVariant v) {
  switch (v) {
    case RnnVariant::kUni: return "uni";
    case RnnVariant::kBi: return "bi";
    case RnnVariant::kMultitask: return "multitask";
  }
  return "?";
}

RnnVariant ParseRnnVariant(std::string_view name) {
  if (name == "uni") return RnnVariant::kUni;
  if (name == "bi") return RnnVariant::kBi;
  if (name == "multitask") return RnnVariant::kMultitask;
  throw Error("unknown RNN variant '" + std::string(name) + "'");
}

RnnModel::RnnModel(Vocabulary vocab, RnnVariant variant, const RnnDims &dims, Rng *rng,
                   const EmbeddingFile *embeddings)
    : variant_(variant), dims_(dims) {
  if (dims.embedding < 1 || dims.hidden < 1 || dims.type_embedding < 1) {
    throw Error("RNN dimensions must be positive");
  }
  vocab_ = std::move(vocab);
  const int d = dims.embedding, h = dims.hidden, e = dims.type_embedding;
  const bool multitask = variant == RnnVariant::kMultitask;
  params_.Add("embeddings", InitEmbeddings(vocab_, d, embeddings, rng), false);
  params_.Add("fwd_wx", GlorotUniform(h, multitask ? d + e : d, rng), true);
  params_.Add("fwd_wh", GlorotUniform(h, h, rng), true);
  params_.Add("fwd_b", Matrix::Zero(h, 1), false);
  if (variant != RnnVariant::kUni) {
    params_.Add("bwd_wx", GlorotUniform(h, d, rng), true);
    params_.Add("bwd_wh", GlorotUniform(h, h, rng), true);
    params_.Add("bwd_b", Matrix::Zero(h, 1), false);
  }
  params_.Add("output_w", GlorotUniform(2, h, rng), true);
  params_.Add("output_b", Matrix::Zero(2, 1), false);
  if (multitask) {
    params_.Add("type_w", GlorotUniform(3, h, rng), true);
    // Nonzero so the first step, where h_0 = 0, has no argmax tie.
    params_.Add("type_b", UniformMatrix(3, 1, 0.1, rng), false);
    params_.Add("type_emb", UniformMatrix(3, e, 0.1, rng), false);
  }
}

RnnModel RnnModel::FromJson(const nlohmann::json &j) {
  if (j.at("model").get<std::string>() != "rnn") throw Error("not an RNN model file");
  RnnDims dims;
  const nlohmann::json &c = j.at("dims");
  dims.embedding = c.at("embedding").get<int>();
  dims.hidden = c.at("hidden").get<int>();
  dims.type_embedding = c.at("type_embedding").get<int>();
  Rng rng(0);
  RnnModel model(Vocabulary(j.at("vocab").get<std::vector<std::string>>()),
                 ParseRnnVariant(j.at("variant").get<std::string>()), dims, &rng);
  model.params_.LoadJson(j.at("tensors"));
  return model;
}

nlohmann::json RnnModel::ToJson() const {
  return {{"model", "rnn"},
          {"variant", RnnVariantName(variant_)},
          {"dims",
           {{"embedding", dims_.embedding},
            {"hidden", dims_.hidden},
            {"type_embedding", dims_.type_embedding}}},
          {"vocab", vocab_.words()},
          {"tensors", params_.ToJson()}};
}

RnnModel::Forward RnnModel::Run(const std::vector<std::string> &sequence) const {
  if (sequence.empty()) throw Error("RNN input sequence is empty");
  Forward fw;
  fw.ids = vocab_.Indices(sequence);
  fw.types = SequenceTypes(sequence);
  const int n = static_cast<int>(sequence.size());
  const int d = dims_.embedding, h = dims_.hidden;
  const bool multitask = variant_ == RnnVariant::kMultitask;
  const Matrix &emb = params_.Get("embeddings").value;

  const Matrix &wx = params_.Get("fwd_wx").value;
  const Matrix &wh = params_.Get("fwd_wh").value;
  const Matrix &b = params_.Get("fwd_b").value;
  fw.forward.push_back(Vector::Zero(h));
  for (int t = 0; t < n; ++t) {
    Vector x(wx.cols());
    x.head(d) = emb.row(fw.ids[t]).transpose();
    if (multitask) {
      const Matrix &type_w = params_.Get("type_w").value;
      const Matrix &type_b = params_.Get("type_b").value;
      Vector probs = Softmax(type_w * fw.forward.back() + type_b.col(0));
      Eigen::Index predicted;
      probs.maxCoeff(&predicted);
      fw.type_probs.push_back(probs);
      fw.fed_types.push_back(static_cast<int>(predicted));
      fw.type_loss -= std::log(probs[static_cast<int>(fw.types[t])]) / n;
      x.tail(dims_.type_embedding) = params_.Get("type_emb").value.row(predicted).transpose();
    }
    fw.inputs.push_back(x);
    fw.forward.push_back((wx * x + wh * fw.forward.back() + b.col(0)).array().tanh());
  }

  Vector final_state = fw.forward.back();
  if (variant_ != RnnVariant::kUni) {
    const Matrix &bx = params_.Get("bwd_wx").value;
    const Matrix &bh = params_.Get("bwd_wh").value;
    const Matrix &bb = params_.Get("bwd_b").value;
    fw.backward.assign(n + 1, Vector::Zero(h));
    for (int t = n - 1; t >= 0; --t) {
      Vector x = emb.row(fw.ids[t]).transpose();
      fw.backward[t] = (bx * x + bh * fw.backward[t + 1] + bb.col(0)).array().tanh();
    }
    final_state += fw.backward[0];
  }
  const Matrix &ow = params_.Get("output_w").value;
  const Matrix &ob = params_.Get("output_b").value;
  fw.probs = Softmax(ow * final_state + ob.col(0));
  return fw;
}

double RnnModel::TotalLoss(const Forward &fw, int label) const {
  double loss = -std::log(fw.probs[label]);
  if (variant_ == RnnVariant::kMultitask) loss += kTypeLossWeight * fw.type_loss;
  return loss;
}

double RnnModel::PredictSequence(const std::vector<std::string> &sequence) const {
  return Run(sequence).probs[1];
}

double RnnModel::Predict(const RelationContext &context) const {
  return PredictSequence(MarkedSequence(context));
}

double RnnModel::Loss(const RelationContext &context, int label) const {
  return TotalLoss(Run(MarkedSequence(context)), label);
}

double RnnModel::Accumulate(const RelationContext &context, int label, double scale) {
  Forward fw = Run(MarkedSequence(context));
  const int n = static_cast<int>(fw.ids.size());
  const int d = dims_.embedding;
  const bool multitask = variant_ == RnnVariant::kMultitask;
  Param &emb = params_.Get("embeddings");

  Vector dlogits = fw.probs;
  dlogits[label] -= 1.0;
  dlogits *= scale;
  Param &ow = params_.Get("output_w");
  Vector final_state = fw.forward.back();
  if (variant_ != RnnVariant::kUni) final_state += fw.backward[0];
  ow.grad += dlogits * final_state.transpose();
  params_.Get("output_b").grad.col(0) += dlogits;
  const Vector dfinal = ow.value.transpose() * dlogits;

  // Forward direction, with the type head feeding gradient into h_{t-1}.
  Param &wx = params_.Get("fwd_wx");
  Param &wh = params_.Get("fwd_wh");
  Param &b = params_.Get("fwd_b");
  Vector dh = dfinal;
  for (int t = n - 1; t >= 0; --t) {
    const Vector &h_t = fw.forward[t + 1];
    const Vector &h_prev = fw.forward[t];
    Vector dpre = dh.array() * (1.0 - h_t.array().square());
    wx.grad += dpre * fw.inputs[t].transpose();
    wh.grad += dpre * h_prev.transpose();
    b.grad.col(0) += dpre;
    Vector dx = wx.value.transpose() * dpre;
    emb.grad.row(fw.ids[t]) += dx.head(d).transpose();
    dh = wh.value.transpose() * dpre;
    if (multitask) {
      params_.Get("type_emb").grad.row(fw.fed_types[t]) +=
          dx.tail(dims_.type_embedding).transpose();
      Vector dtype = fw.type_probs[t];
      dtype[static_cast<int>(fw.types[t])] -= 1.0;
      dtype *= scale * kTypeLossWeight / n;
      Param &type_w = params_.Get("type_w");
      type_w.grad += dtype * h_prev.transpose();
      params_.Get("type_b").grad.col(0) += dtype;
      dh += type_w.value.transpose() * dtype;
    }
  }

  if (variant_ != RnnVariant::kUni) {
    Param &bx = params_.Get("bwd_wx");
    Param &bh = params_.Get("bwd_wh");
    Param &bb = params_.Get("bwd_b");
    Vector dg = dfinal;
    for (int t = 0; t < n; ++t) {
      const Vector &g_t = fw.backward[t];
      Vector dpre = dg.array() * (1.0 - g_t.array().square());
      Vector x = emb.value.row(fw.ids[t]).transpose();
      bx.grad += dpre * x.transpose();
      bh.grad += dpre * fw.backward[t + 1].transpose();
      bb.grad.col(0) += dpre;
      emb.grad.row(fw.ids[t]) += (bx.value.transpose() * dpre).transpose();
      dg = bh.value.transpose() * dpre;
    }
  }
  return TotalLoss(fw, label);
}

double RnnEnsembleScore(std::optional<double> uni, std::optional<double> bi,
                        std::optional<double> multitask) {
  std::optional<double> best;
  double best_confidence = -1.0;
  for (const std::optional<double> &p : {uni, bi, multitask}) {
    if (!p) continue;
    double confidence = std::max(*p, 1.0 - *p);
    if (confidence > best_confidence) {
      best = p;
      best_confidence = confidence;
    }
  }
  if (!best) throw Error("RNN ensemble needs at least one score");
  return *best;
}

}  // namespace slotfill
