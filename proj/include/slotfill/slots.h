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

#ifndef SLOTFILL_SLOTS_H_
#define SLOTFILL_SLOTS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slotfill/ner.h"
#include "slotfill/retrieval.h"

namespace slotfill {

enum class LocationGranularity { kNone, kCity, kStateOrProvince, kCountry };

std::string_view GranularityName(LocationGranularity g);

// Per-slot checks applied to raw filler candidates.
struct FillerValidation {
  bool integer_only = false;
  std::optional<double> min_value;
  std::optional<double> max_value;
  bool date = false;
};

struct SlotConfig {
  std::string slot;
  // Fillers are NE-typed spans, or members of the string list named
  // `list_name` (tagged with the same NeType).
  NeType filler_type = NeType::kPER;
  bool string_list = false;
  std::string list_name;
  bool single_valued = false;
  int top_n = 1;
  double threshold = 0.5;
  std::optional<std::string> inverse_slot;
  std::string canonical_slot;
  // Entity and filler trade places when scored by the canonical classifier.
  bool swapped = false;
  bool classifier_less = false;
  LocationGranularity location = LocationGranularity::kNone;
  FillerValidation validation;
};

// The seven slots without enough training data for a classifier.
const std::set<std::string> &ClassifierLessSlots();

class SlotTable {
 public:
  SlotTable() = default;

  // JSON object: slot -> {filler_kind: {ne_type|string_list}, single_valued,
  // top_n, threshold, inverse_slot, canonical_slot, swapped, classifier_less,
  // location, validation}.
  static SlotTable Load(const std::string &path);
  static SlotTable Parse(std::string_view json);

  void Add(SlotConfig config);

  // Throws Error for an unknown slot.
  const SlotConfig &Get(std::string_view slot) const;
  bool Contains(std::string_view slot) const;

  // (canonical slot, arguments swapped). Canonical names map to themselves.
  std::pair<std::string, bool> Canonicalize(std::string_view slot) const;

  // Entity type a slot's query entity must have ("per:" -> PER, ...).
  static EntityType QueryEntityType(std::string_view slot);

  std::vector<std::string> slots() const;
  std::set<std::string> canonical_slots() const;
  // Queryable slots sharing a canonical slot.
  std::vector<std::string> SlotsFor(std::string_view canonical) const;

 private:
  std::map<std::string, SlotConfig, std::less<>> configs_;
};

}  // namespace slotfill

#endif  // SLOTFILL_SLOTS_H_
