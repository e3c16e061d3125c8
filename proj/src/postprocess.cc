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

#include "slotfill/postprocess.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <regex>

#include "slotfill/corpus.h"
#include "slotfill/ner.h"

namespace slotfill {
namespace {

bool IsLeap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

bool ValidDay(int year, int month, int day) {
  static const int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12 || day < 1) return false;
  int limit = kDays[month - 1] + (month == 2 && IsLeap(year) ? 1 : 0);
  return day <= limit;
}

bool ParseNumber(std::string_view w, int max_digits, int *out) {
  if (!IsDigits(w) || static_cast<int>(w.size()) > max_digits) return false;
  *out = std::stoi(std::string(w));
  return true;
}

bool ParseYear(std::string_view w, int *out) {
  return w.size() == 4 && ParseNumber(w, 4, out);
}

std::string Two(int v) { return v < 10 ? "0" + std::to_string(v) : std::to_string(v); }

std::optional<std::string> Format(int year, int month, int day) {
  if (month != 0 && (month < 1 || month > 12)) return std::nullopt;
  if (day != 0 && !ValidDay(year, month, day)) return std::nullopt;
  char y[8];
  std::snprintf(y, sizeof(y), "%04d", year);
  return std::string(y) + "-" + (month == 0 ? "XX" : Two(month)) + "-" +
         (day == 0 ? "XX" : Two(day));
}

}  // namespace

double EffectiveThreshold(double base, int hop, double run_bonus) {
  double t = base + run_bonus + (hop == 1 ? kHopOneBonus : 0.0);
  return std::min(t, 1.0);
}

bool IsNormalizedDate(std::string_view s) {
  static const std::regex kDate("^[0-9]{4}-([0-9]{2}|XX)-([0-9]{2}|XX)$");
  return std::regex_match(s.begin(), s.end(), kDate);
}

std::optional<std::string> NormalizeDate(std::string_view surface) {
  static const std::regex kIso("^([0-9]{4})-([0-9]{2}|XX)-([0-9]{2}|XX)$");
  static const std::regex kSlash("^([0-9]{1,2})/([0-9]{1,2})/([0-9]{4})$");
  std::vector<std::string> w;
  for (const Token &t : Tokenize(Trim(surface))) w.push_back(t.text);
  int year = 0, month = 0, day = 0;
  std::smatch m;
  switch (w.size()) {
    case 1:
      if (std::regex_match(w[0], m, kIso)) {
        year = std::stoi(m[1]);
        if (m[2] == "XX" && m[3] != "XX") return std::nullopt;
        month = m[2] == "XX" ? 0 : std::stoi(m[2]);
        day = m[3] == "XX" ? 0 : std::stoi(m[3]);
        if (month == 0 && m[2] != "XX") return std::nullopt;
        if (day == 0 && m[3] != "XX") return std::nullopt;
        return Format(year, month, day);
      }
      if (std::regex_match(w[0], m, kSlash)) {
        month = std::stoi(m[1]);
        day = std::stoi(m[2]);
        year = std::stoi(m[3]);
        if (month == 0 || day == 0) return std::nullopt;
        return Format(year, month, day);
      }
      if (ParseYear(w[0], &year)) return Format(year, 0, 0);
      return std::nullopt;
    case 2:
      // Month YYYY
      if ((month = MonthNumber(w[0])) > 0 && ParseYear(w[1], &year)) return Format(year, month, 0);
      return std::nullopt;
    case 3:
      // Month D YYYY or D Month YYYY
      if ((month = MonthNumber(w[0])) > 0 && ParseNumber(w[1], 2, &day) && ParseYear(w[2], &year)) {
        if (day == 0) return std::nullopt;
        return Format(year, month, day);
      }
      if (ParseNumber(w[0], 2, &day) && (month = MonthNumber(w[1])) > 0 && ParseYear(w[2], &year)) {
        if (day == 0) return std::nullopt;
        return Format(year, month, day);
      }
      return std::nullopt;
    case 4:
      // Month D, YYYY
      if ((month = MonthNumber(w[0])) > 0 && ParseNumber(w[1], 2, &day) && w[2] == "," &&
          ParseYear(w[3], &year)) {
        if (day == 0) return std::nullopt;
        return Format(year, month, day);
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

LocationMaps LocationMaps::LoadDir(const std::string &dir) {
  namespace fs = std::filesystem;
  LocationMaps maps;
  auto pairs = [&](const char *name, auto add) {
    fs::path path = fs::path(dir) / name;
    if (!fs::exists(path)) return;
    for (const TsvRow &row : ReadTsv(path.string())) {
      if (row.fields.size() < 2) {
        throw Error(path.string() + ":" + std::to_string(row.line) + ": expected two columns");
      }
      (maps.*add)(Trim(row.fields[0]), Trim(row.fields[1]));
    }
  };
  auto list = [&](const char *name, auto add) {
    fs::path path = fs::path(dir) / name;
    if (!fs::exists(path)) return;
    for (const std::string &line : ReadLines(path.string())) {
      std::string entry = Trim(line);
      if (!entry.empty() && entry[0] != '#') (maps.*add)(entry);
    }
  };
  pairs("city_state.tsv", &LocationMaps::AddCityState);
  pairs("city_country.tsv", &LocationMaps::AddCityCountry);
  pairs("state_country.tsv", &LocationMaps::AddStateCountry);
  list("cities.txt", &LocationMaps::AddCity);
  list("states.txt", &LocationMaps::AddState);
  list("countries.txt", &LocationMaps::AddCountry);
  maps.Validate();
  return maps;
}

void LocationMaps::AddCityState(const std::string &city, const std::string &state) {
  city_state_[ToLower(city)] = state;
  cities_.insert(ToLower(city));
  states_.insert(ToLower(state));
}

void LocationMaps::AddCityCountry(const std::string &city, const std::string &country) {
  city_country_[ToLower(city)] = country;
  cities_.insert(ToLower(city));
  countries_.insert(ToLower(country));
}

void LocationMaps::AddStateCountry(const std::string &state, const std::string &country) {
  state_country_[ToLower(state)] = country;
  states_.insert(ToLower(state));
  countries_.insert(ToLower(country));
}

void LocationMaps::AddCity(const std::string &city) { cities_.insert(ToLower(city)); }
void LocationMaps::AddState(const std::string &state) { states_.insert(ToLower(state)); }
void LocationMaps::AddCountry(const std::string &country) { countries_.insert(ToLower(country)); }

void LocationMaps::Validate() const {
  for (const auto &[city, state] : city_state_) {
    auto country = city_country_.find(city);
    auto via_state = state_country_.find(ToLower(state));
    if (country == city_country_.end() || via_state == state_country_.end()) continue;
    if (ToLower(country->second) != ToLower(via_state->second)) {
      throw Error("location maps disagree for " + city + ": " + country->second + " vs " +
                  via_state->second);
    }
  }
}

LocationGranularity LocationMaps::Disambiguate(std::string_view surface) const {
  std::string key = ToLower(Trim(surface));
  if (countries_.count(key)) return LocationGranularity::kCountry;
  if (states_.count(key)) return LocationGranularity::kStateOrProvince;
  if (cities_.count(key)) return LocationGranularity::kCity;
  return LocationGranularity::kNone;
}

std::optional<std::string> LocationMaps::Lookup(std::string_view surface, LocationGranularity found,
                                                LocationGranularity wanted) const {
  std::string key = ToLower(Trim(surface));
  auto get = [](const std::map<std::string, std::string> &m,
                const std::string &k) -> std::optional<std::string> {
    auto it = m.find(k);
    if (it == m.end()) return std::nullopt;
    return it->second;
  };
  using G = LocationGranularity;
  if (found == G::kCity && wanted == G::kStateOrProvince) return get(city_state_, key);
  if (found == G::kCity && wanted == G::kCountry) {
    if (auto c = get(city_country_, key)) return c;
    if (auto s = get(city_state_, key)) return get(state_country_, ToLower(*s));
    return std::nullopt;
  }
  if (found == G::kStateOrProvince && wanted == G::kCountry) return get(state_country_, key);
  return std::nullopt;
}

std::optional<Answer> InferLocation(const Answer &answer, LocationGranularity found,
                                    LocationGranularity wanted, const LocationMaps &maps) {
  std::optional<std::string> mapped = maps.Lookup(answer.filler, found, wanted);
  if (!mapped) return std::nullopt;
  Answer inferred = answer;
  inferred.filler = *mapped;
  return inferred;
}

std::vector<Answer> RankAndTruncate(std::vector<Answer> answers, const SlotConfig &config) {
  std::sort(answers.begin(), answers.end(), [](const Answer &a, const Answer &b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.doc_id != b.doc_id) return a.doc_id < b.doc_id;
    return a.filler < b.filler;
  });
  const size_t limit = config.single_valued ? 1 : static_cast<size_t>(config.top_n);
  std::vector<Answer> out;
  std::set<std::string> seen;
  for (Answer &a : answers) {
    if (out.size() >= limit) break;
    if (!seen.insert(a.filler).second) continue;
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace slotfill
