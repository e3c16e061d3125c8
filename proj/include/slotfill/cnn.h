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

#ifndef SLOTFILL_CNN_H_
#define SLOTFILL_CNN_H_

#include <array>
#include <string>
#include <vector>

#include "slotfill/embeddings.h"

namespace slotfill {

struct CnnDims {
  int embedding = 50;
  int filters = 50;
  int width = 3;
  int hidden = 100;
};

// Convolutional relation classifier. One filter bank is shared by the left,
// middle and right contexts; each context is convolved, passed through tanh
// and max-pooled per filter. The three pooled vectors plus the
// entity-first flag feed a tanh hidden layer and a two-way softmax.
//
// Tensors: embeddings |V| x d, conv_w m x (w*d), conv_b m, hidden_w
// (3m+1) x h, hidden_b h, output_w h x 2, output_b 2.
class CnnModel : public RelationClassifier {
 public:
  CnnModel(Vocabulary vocab, const CnnDims &dims, Rng *rng, const EmbeddingFile *embeddings = nullptr);

  static CnnModel FromJson(const nlohmann::json &j);

  double Predict(const RelationContext &context) const override;
  double Loss(const RelationContext &context, int label) const override;
  double Accumulate(const RelationContext &context, int label, double scale) override;
  std::string Kind() const override { return "cnn"; }
  nlohmann::json ToJson() const override;

  const CnnDims &dims() const { return dims_; }

  // Pooled filter responses for one context segment (exposed for tests).
  Vector PoolSegment(const std::vector<std::string> &words) const;

 private:
  struct Segment {
    std::vector<int> ids;  // -1 marks zero padding
    Matrix activations;    // m x positions
    std::vector<int> argmax;
    Vector pooled;
  };
  struct Forward {
    std::array<Segment, 3> segments;
    Vector features;
    Vector hidden;
    Vector probs;
  };

  Segment RunSegment(const std::vector<std::string> &words) const;
  Vector Window(const Segment &s, int position) const;
  Forward Run(const RelationContext &context) const;

  CnnDims dims_;
};

}  // namespace slotfill

#endif  // SLOTFILL_CNN_H_
