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

#include "slotfill/embeddings.h"

#include <cmath>
#include <sstream>

namespace slotfill {

Vocabulary::Vocabulary() {
  Add(kUnknown);
  Add(kEntityMarker);
  Add(kFillerMarker);
}

Vocabulary::Vocabulary(const std::vector<std::string> &words) {
  for (const std::string &w : words) Add(w);
  if (size() < 3 || words_[kUnknownIndex] != kUnknown || words_[kEntityMarkerIndex] != kEntityMarker ||
      words_[kFillerMarkerIndex] != kFillerMarker) {
    throw Error("vocabulary must start with the reserved tokens");
  }
}

int Vocabulary::Add(std::string_view word) {
  std::string key = ToLower(word);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  int id = size();
  index_.emplace(key, id);
  words_.push_back(std::move(key));
  return id;
}

int Vocabulary::Index(std::string_view word) const {
  if (word == kEntityMarker) return kEntityMarkerIndex;
  if (word == kFillerMarker) return kFillerMarkerIndex;
  auto it = index_.find(ToLower(word));
  return it == index_.end() ? kUnknownIndex : it->second;
}

std::vector<int> Vocabulary::Indices(const std::vector<std::string> &words) const {
  std::vector<int> out;
  out.reserve(words.size());
  for (const std::string &w : words) out.push_back(Index(w));
  return out;
}

Vocabulary BuildVocabulary(const std::vector<RelationContext> &contexts) {
  Vocabulary vocab;
  for (const RelationContext &c : contexts) {
    for (const auto *part : {&c.left, &c.middle, &c.right}) {
      for (const std::string &w : *part) vocab.Add(w);
    }
  }
  return vocab;
}

EmbeddingFile EmbeddingFile::Load(const std::string &path) {
  EmbeddingFile file;
  int number = 0;
  for (const std::string &line : ReadLines(path)) {
    ++number;
    std::vector<std::string> fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    std::vector<double> v;
    for (size_t i = 1; i < fields.size(); ++i) {
      char *end = nullptr;
      double x = std::strtod(fields[i].c_str(), &end);
      if (*end != '\0' || !std::isfinite(x)) {
        throw Error(path + ":" + std::to_string(number) + ": bad vector component");
      }
      v.push_back(x);
    }
    if (v.empty()) throw Error(path + ":" + std::to_string(number) + ": missing vector");
    if (file.dimension == 0) file.dimension = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != file.dimension) {
      throw Error(path + ":" + std::to_string(number) + ": inconsistent dimension");
    }
    file.vectors[ToLower(fields[0])] = std::move(v);
  }
  return file;
}

Matrix InitEmbeddings(const Vocabulary &vocab, int dimension, const EmbeddingFile *file, Rng *rng) {
  if (dimension < 1) throw Error("embedding dimension must be >= 1");
  if (file != nullptr && file->dimension != 0 && file->dimension != dimension) {
    throw Error("embedding file dimension does not match the model");
  }
  Matrix m = UniformMatrix(vocab.size(), dimension, 0.1, rng);
  if (file != nullptr) {
    for (int i = 0; i < vocab.size(); ++i) {
      auto it = file->vectors.find(vocab.words()[i]);
      if (it == file->vectors.end()) continue;
      for (int k = 0; k < dimension; ++k) m(i, k) = it->second[k];
    }
  }
  return m;
}

std::vector<std::string> MarkedSequence(const RelationContext &context) {
  std::vector<std::string> seq(context.left);
  seq.emplace_back(context.entity_first ? Vocabulary::kEntityMarker : Vocabulary::kFillerMarker);
  seq.insert(seq.end(), context.middle.begin(), context.middle.end());
  seq.emplace_back(context.entity_first ? Vocabulary::kFillerMarker : Vocabulary::kEntityMarker);
  seq.insert(seq.end(), context.right.begin(), context.right.end());
  return seq;
}

std::vector<ArgumentType> SequenceTypes(const std::vector<std::string> &sequence) {
  std::vector<ArgumentType> types;
  types.reserve(sequence.size());
  for (const std::string &w : sequence) {
    if (w == Vocabulary::kEntityMarker) {
      types.push_back(ArgumentType::kEntity);
    } else if (w == Vocabulary::kFillerMarker) {
      types.push_back(ArgumentType::kFiller);
    } else {
      types.push_back(ArgumentType::kOther);
    }
  }
  return types;
}

}  // namespace slotfill
