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

#ifndef SLOTFILL_RNN_H_
#define SLOTFILL_RNN_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slotfill/embeddings.h"

namespace slotfill {

enum class RnnVariant { kUni, kBi, kMultitask };

std::string_view RnnVariantName(RnnVariant v);
RnnVariant ParseRnnVariant(std::string_view name);

struct RnnDims {
  int embedding = 50;
  int hidden = 50;
  // Size of the predicted-type embedding fed back by the multitask variant.
  int type_embedding = 3;
};

// Elman relation classifiers over the marked word sequence.
//
//   uni:       h_t = tanh(Wx x_t + Wh h_{t-1} + b), softmax(Wo h_n + bo)
//   bi:        a second recurrence runs from word n to word 1 with its own
//              weights; the two final states are summed before the softmax
//   multitask: bidirectional; at every step the forward state also predicts
//              the type (entity, filler, other) of the next word, and the
//              argmax type's embedding is appended to that word's input.
//              Training adds the mean type cross-entropy to the loss.
//
// Tensors: embeddings |V| x d, fwd_wx h x d' (d' = d, or d+e for
// multitask), fwd_wh h x h, fwd_b h, [bwd_wx h x d, bwd_wh, bwd_b],
// output_w 2 x h, output_b 2, [type_w 3 x h, type_b 3, type_emb 3 x e].
class RnnModel : public RelationClassifier {
 public:
  RnnModel(Vocabulary vocab, RnnVariant variant, const RnnDims &dims, Rng *rng,
           const EmbeddingFile *embeddings = nullptr);

  static RnnModel FromJson(const nlohmann::json &j);

  double Predict(const RelationContext &context) const override;
  double Loss(const RelationContext &context, int label) const override;
  double Accumulate(const RelationContext &context, int label, double scale) override;
  std::string Kind() const override { return "rnn"; }
  nlohmann::json ToJson() const override;

  // Sequence-level entry points; the sequence must be nonempty.
  double PredictSequence(const std::vector<std::string> &sequence) const;

  RnnVariant variant() const { return variant_; }
  const RnnDims &dims() const { return dims_; }

 private:
  struct Forward {
    std::vector<int> ids;
    std::vector<ArgumentType> types;
    std::vector<Vector> inputs;    // forward-direction inputs x'_t
    std::vector<Vector> forward;   // h_0 .. h_n
    std::vector<Vector> backward;  // g_1 .. g_{n+1}, g_{n+1} = 0
    std::vector<Vector> type_probs;
    std::vector<int> fed_types;    // argmax type appended to x'_t
    Vector probs;
    double type_loss = 0.0;
  };

  Forward Run(const std::vector<std::string> &sequence) const;
  double TotalLoss(const Forward &fw, int label) const;

  RnnVariant variant_;
  RnnDims dims_;
};

// Weight of the type-prediction loss in the multitask objective.
constexpr double kTypeLossWeight = 1.0;

// The score of the most confident RNN, confidence(p) = max(p, 1-p); ties
// prefer uni, then bi, then multitask. Throws Error if all are absent.
double RnnEnsembleScore(std::optional<double> uni, std::optional<double> bi,
                        std::optional<double> multitask);

}  // namespace slotfill

#endif  // SLOTFILL_RNN_H_
