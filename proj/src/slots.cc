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

#include "slotfill/slots.h"

#include "json.hpp"

namespace slotfill {

std::string_view GranularityName(LocationGranularity g) {
  switch (g) {
    case LocationGranularity::kNone: return "none";
    case LocationGranularity::kCity: return "city";
    case LocationGranularity::kStateOrProvince: return "stateorprovince";
    case LocationGranularity::kCountry: return "country";
  }
  return "?";
}

const std::set<std::string> &ClassifierLessSlots() {
  static const std::set<std::string> kSlots = {
      "per:charges",
      "per:other_family",
      "per:religion",
      "org:date_dissolved",
      "org:number_of_employees_members",
      "org:political_religious_affiliation",
      "org:shareholders",
  };
  return kSlots;
}

SlotTable SlotTable::Parse(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw Error("slot config must be a JSON object");
  SlotTable table;
  for (const auto &[slot, v] : j.items()) {
    try {
      SlotConfig c;
      c.slot = slot;
      const nlohmann::json &kind = v.at("filler_kind");
      if (kind.contains("ne_type")) {
        c.filler_type = ParseNeType(kind["ne_type"].get<std::string>());
      } else if (kind.contains("string_list")) {
        c.string_list = true;
        c.list_name = kind["string_list"].get<std::string>();
        c.filler_type = ParseNeType(c.list_name);
      } else {
        throw Error("filler_kind needs ne_type or string_list");
      }
      c.single_valued = v.value("single_valued", false);
      c.top_n = v.value("top_n", 1);
      c.threshold = v.value("threshold", 0.5);
      if (v.contains("inverse_slot") && !v["inverse_slot"].is_null()) {
        c.inverse_slot = v["inverse_slot"].get<std::string>();
      }
      c.canonical_slot = v.value("canonical_slot", slot);
      c.swapped = v.value("swapped", false);
      c.classifier_less = v.value("classifier_less", false);
      std::string location = v.value("location", "none");
      if (location == "city") {
        c.location = LocationGranularity::kCity;
      } else if (location == "stateorprovince") {
        c.location = LocationGranularity::kStateOrProvince;
      } else if (location == "country") {
        c.location = LocationGranularity::kCountry;
      } else if (location != "none") {
        throw Error("unknown location granularity '" + location + "'");
      }
      if (v.contains("validation")) {
        const nlohmann::json &val = v["validation"];
        c.validation.integer_only = val.value("integer", false);
        c.validation.date = val.value("date", false);
        if (val.contains("min")) c.validation.min_value = val["min"].get<double>();
        if (val.contains("max")) c.validation.max_value = val["max"].get<double>();
      }
      table.Add(std::move(c));
    } catch (const std::exception &e) {
      throw Error("slot " + slot + ": " + e.what());
    }
  }
  return table;
}

SlotTable SlotTable::Load(const std::string &path) { return Parse(ReadFile(path)); }

void SlotTable::Add(SlotConfig c) {
  if (c.single_valued && c.top_n != 1) throw Error("single-valued slot needs top_n = 1");
  if (c.top_n < 1) throw Error("top_n must be >= 1");
  if (c.threshold < 0.0 || c.threshold > 1.0) throw Error("threshold outside [0,1]");
  bool listed = ClassifierLessSlots().count(c.slot) > 0;
  if (listed != c.classifier_less) throw Error("classifier_less flag disagrees with slot list");
  std::string key = c.slot;
  configs_[key] = std::move(c);
}

const SlotConfig &SlotTable::Get(std::string_view slot) const {
  auto it = configs_.find(slot);
  if (it == configs_.end()) throw Error("unknown slot '" + std::string(slot) + "'");
  return it->second;
}

bool SlotTable::Contains(std::string_view slot) const { return configs_.find(slot) != configs_.end(); }

std::pair<std::string, bool> SlotTable::Canonicalize(std::string_view slot) const {
  auto it = configs_.find(slot);
  if (it != configs_.end()) return {it->second.canonical_slot, it->second.swapped};
  for (const auto &[name, c] : configs_) {
    if (c.canonical_slot == slot) return {std::string(slot), false};
  }
  throw Error("unknown slot '" + std::string(slot) + "'");
}

EntityType SlotTable::QueryEntityType(std::string_view slot) {
  if (StartsWith(slot, "per:")) return EntityType::kPER;
  if (StartsWith(slot, "org:")) return EntityType::kORG;
  if (StartsWith(slot, "gpe:")) return EntityType::kGPE;
  throw Error("slot '" + std::string(slot) + "' has no entity prefix");
}

std::vector<std::string> SlotTable::slots() const {
  std::vector<std::string> out;
  for (const auto &[name, c] : configs_) out.push_back(name);
  return out;
}

std::set<std::string> SlotTable::canonical_slots() const {
  std::set<std::string> out;
  for (const auto &[name, c] : configs_) out.insert(c.canonical_slot);
  return out;
}

std::vector<std::string> SlotTable::SlotsFor(std::string_view canonical) const {
  std::vector<std::string> out;
  for (const auto &[name, c] : configs_) {
    if (c.canonical_slot == canonical) out.push_back(name);
  }
  return out;
}

}  // namespace slotfill
