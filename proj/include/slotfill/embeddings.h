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

#ifndef SLOTFILL_EMBEDDINGS_H_
#define SLOTFILL_EMBEDDINGS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slotfill/extract.h"
#include "slotfill/tensor.h"

namespace slotfill {

// Word -> row index. Rows 0..2 are reserved for the unknown word and the
// two argument markers.
class Vocabulary {
 public:
  static constexpr std::string_view kUnknown = "<unk>";
  static constexpr std::string_view kEntityMarker = "<ent>";
  static constexpr std::string_view kFillerMarker = "<fil>";
  static constexpr int kUnknownIndex = 0;
  static constexpr int kEntityMarkerIndex = 1;
  static constexpr int kFillerMarkerIndex = 2;

  Vocabulary();
  explicit Vocabulary(const std::vector<std::string> &words);

  // Adds a lowercased word; returns its index.
  int Add(std::string_view word);
  // Index of the lowercased word, or kUnknownIndex.
  int Index(std::string_view word) const;
  std::vector<int> Indices(const std::vector<std::string> &words) const;

  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<std::string> &words() const { return words_; }

 private:
  std::vector<std::string> words_;
  std::map<std::string, int, std::less<>> index_;
};

// Every context word of every training context.
Vocabulary BuildVocabulary(const std::vector<RelationContext> &contexts);

// Text embeddings: one "word v1 ... vd" line per word.
struct EmbeddingFile {
  int dimension = 0;
  std::map<std::string, std::vector<double>> vectors;

  static EmbeddingFile Load(const std::string &path);
};

// |V| x d matrix: file vectors where available, uniform(-0.1, 0.1) elsewhere.
Matrix InitEmbeddings(const Vocabulary &vocab, int dimension, const EmbeddingFile *file, Rng *rng);

// Argument types predicted by the multitask RNN.
enum class ArgumentType { kEntity = 0, kFiller = 1, kOther = 2 };

// Word sequence with the entity and filler spans replaced by marker tokens:
// left, first marker, middle, second marker, right.
std::vector<std::string> MarkedSequence(const RelationContext &context);
std::vector<ArgumentType> SequenceTypes(const std::vector<std::string> &sequence);

// Common surface of the trainable relation classifiers.
class RelationClassifier {
 public:
  virtual ~RelationClassifier() = default;

  // Probability that the context expresses the relation.
  virtual double Predict(const RelationContext &context) const = 0;
  // Training loss for one example, without regularization.
  virtual double Loss(const RelationContext &context, int label) const = 0;
  // Adds scale * dLoss/dparams to the gradient buffers; returns the loss.
  virtual double Accumulate(const RelationContext &context, int label, double scale) = 0;

  virtual std::string Kind() const = 0;
  virtual nlohmann::json ToJson() const = 0;

  ParamSet &params() { return params_; }
  const ParamSet &params() const { return params_; }
  const Vocabulary &vocab() const { return vocab_; }

 protected:
  ParamSet params_;
  Vocabulary vocab_;
};

}  // namespace slotfill

#endif  // SLOTFILL_EMBEDDINGS_H_
