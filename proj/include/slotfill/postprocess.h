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

#ifndef SLOTFILL_POSTPROCESS_H_
#define SLOTFILL_POSTPROCESS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slotfill/slots.h"

namespace slotfill {

struct Provenance {
  std::string doc_id;
  int sentence_index = 0;
  int entity_start = 0, entity_end = 0;
  int filler_start = 0, filler_end = 0;
};

struct Answer {
  std::string query_id;
  int hop = 0;
  std::string slot;
  std::string filler;
  std::string doc_id;
  std::vector<Provenance> provenance;
  double score = 0.0;
  // For hop-1 answers: the hop-0 filler that became the query entity.
  std::string parent_filler;
};

// Added to the base threshold for hop-1 queries.
constexpr double kHopOneBonus = 0.1;
// Added by the high-precision run.
constexpr double kHighPrecisionBonus = 0.2;

// base + 0.1 for hop 1 + run_bonus, capped at 1.0.
double EffectiveThreshold(double base, int hop, double run_bonus);

// Recognizes "Month D, YYYY", "D Month YYYY", "Month YYYY", "YYYY-MM-DD",
// "MM/DD/YYYY" and "YYYY". Unknown parts become XX; nullopt if unparseable
// or not a real calendar date.
std::optional<std::string> NormalizeDate(std::string_view surface);

// True for YYYY-MM-DD with XX allowed for month and day.
bool IsNormalizedDate(std::string_view s);

class LocationMaps {
 public:
  LocationMaps() = default;

  // Reads city_state.tsv, city_country.tsv, state_country.tsv, cities.txt,
  // states.txt and countries.txt from `dir`. Throws Error when a city's
  // state lies in a different country than the city itself.
  static LocationMaps LoadDir(const std::string &dir);

  void AddCityState(const std::string &city, const std::string &state);
  void AddCityCountry(const std::string &city, const std::string &country);
  void AddStateCountry(const std::string &state, const std::string &country);
  void AddCity(const std::string &city);
  void AddState(const std::string &state);
  void AddCountry(const std::string &country);
  // Throws Error on an inconsistent city/state/country triangle.
  void Validate() const;

  // Country beats state beats city when a name is on several lists.
  LocationGranularity Disambiguate(std::string_view surface) const;

  // Coarser location containing `surface` (found at `found` granularity),
  // or nullopt when no mapping exists.
  std::optional<std::string> Lookup(std::string_view surface, LocationGranularity found,
                                    LocationGranularity wanted) const;

 private:
  // Keys lowercased; values keep their display form.
  std::map<std::string, std::string> city_state_, city_country_, state_country_;
  std::set<std::string> cities_, states_, countries_;
};

// Rewrites a city/state answer to the requested coarser granularity. Score
// and provenance are carried over.
std::optional<Answer> InferLocation(const Answer &answer, LocationGranularity found,
                                    LocationGranularity wanted, const LocationMaps &maps);

// Best first (score, then doc id, then filler), duplicates collapsed to the
// best-scored copy, cut to 1 or top_n answers.
std::vector<Answer> RankAndTruncate(std::vector<Answer> answers, const SlotConfig &config);

}  // namespace slotfill

#endif  // SLOTFILL_POSTPROCESS_H_
