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


#include <regex>

#include "doctest.h"
#include "slotfill/postprocess.h"
#include "slotfill/tensor.h"
#include "support/oracles.h"

namespace slotfill {
namespace {

const std::regex kDate("^[0-9]{4}-([0-9]{2}|XX)-([0-9]{2}|XX)$");

TEST_CASE("date oracle table") {
  REQUIRE(testing::DateTable().size() == 25);
  for (const testing::DateCase &c : testing::DateTable()) {
    CAPTURE(c.surface);
    CHECK(NormalizeDate(c.surface).value_or("") == c.expected);
  }
}

TEST_CASE("normalized dates always match the output format") {
  const std::vector<std::string> pieces = {"March", "Sep", "4", "31", "0", "13", "1988", "2000", ",", "/",
                                           "-",     "XX",  "04", "12", "May", "1/2/2003", "1988-03-04"};
  Rng rng(31);
  int emitted = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    std::string surface;
    for (int n = 1 + static_cast<int>(rng.Index(4)); n > 0; --n) {
      surface += pieces[rng.Index(pieces.size())];
      if (rng.Uniform() < 0.7) surface += " ";
    }
    std::optional<std::string> d = NormalizeDate(surface);
    if (!d) continue;
    ++emitted;
    CAPTURE(surface);
    CHECK(std::regex_match(*d, kDate));
    CHECK(IsNormalizedDate(*d));
    CHECK(NormalizeDate(*d) == d);
  }
  CHECK(emitted > 100);
}

TEST_CASE("effective thresholds") {
  CHECK(EffectiveThreshold(0.30, 1, 0.0) == doctest::Approx(0.40));
  CHECK(EffectiveThreshold(0.30, 0, kHighPrecisionBonus) == doctest::Approx(0.50));
  CHECK(EffectiveThreshold(0.95, 1, kHighPrecisionBonus) == 1.0);
  CHECK(EffectiveThreshold(0.30, 0, 0.0) == 0.30);
  for (int i = 0; i <= 90; ++i) {
    const double base = i / 100.0;
    CHECK(std::abs(EffectiveThreshold(base, 1, 0.0) - EffectiveThreshold(base, 0, 0.0) - kHopOneBonus) < 1e-12);
    CHECK(EffectiveThreshold(base, 0, kHighPrecisionBonus) >= EffectiveThreshold(base, 0, 0.0));
  }
}

LocationMaps Maps() {
  LocationMaps m;
  m.AddCity("Munich");
  m.AddCity("Atlanta");
  m.AddState("Bavaria");
  m.AddState("Georgia");
  m.AddCountry("Germany");
  m.AddCountry("Georgia");
  m.AddCountry("United States");
  m.AddCityState("Munich", "Bavaria");
  m.AddCityCountry("Munich", "Germany");
  m.AddStateCountry("Bavaria", "Germany");
  m.AddCityState("Atlanta", "Georgia");
  m.AddCityCountry("Atlanta", "United States");
  m.AddStateCountry("Georgia", "United States");
  return m;
}

TEST_CASE("location disambiguation") {
  LocationMaps m = Maps();
  m.Validate();
  CHECK(m.Disambiguate("Munich") == LocationGranularity::kCity);
  CHECK(m.Disambiguate("munich ") == LocationGranularity::kCity);
  CHECK(m.Disambiguate("Georgia") == LocationGranularity::kCountry);
  CHECK(m.Disambiguate("Bavaria") == LocationGranularity::kStateOrProvince);
  CHECK(m.Disambiguate("Xyzzy") == LocationGranularity::kNone);
}

TEST_CASE("location inference") {
  LocationMaps m = Maps();
  Answer a;
  a.filler = "Munich";
  a.score = 0.8;
  a.doc_id = "d";
  a.provenance = {{"d", 0, 0, 2, 5, 6}};
  std::optional<Answer> state = InferLocation(a, LocationGranularity::kCity, LocationGranularity::kStateOrProvince, m);
  REQUIRE(state.has_value());
  CHECK(state->filler == "Bavaria");
  CHECK(state->score == a.score);
  CHECK(state->provenance.size() == 1);
  CHECK(state->provenance[0].filler_start == 5);

  a.filler = "Bavaria";
  std::optional<Answer> country = InferLocation(a, LocationGranularity::kStateOrProvince, LocationGranularity::kCountry, m);
  REQUIRE(country.has_value());
  CHECK(country->filler == "Germany");

  a.filler = "Springfield";
  CHECK_FALSE(InferLocation(a, LocationGranularity::kCity, LocationGranularity::kCountry, m).has_value());
}

TEST_CASE("inconsistent location maps are rejected") {
  LocationMaps m = Maps();
  m.AddCityCountry("Munich", "United States");
  CHECK_THROWS_AS(m.Validate(), Error);
}

Answer Make(const std::string &filler, const std::string &doc, double score) {
  Answer a;
  a.filler = filler;
  a.doc_id = doc;
  a.score = score;
  return a;
}

TEST_CASE("ranking and truncation") {
  SlotConfig single;
  single.single_valued = true;
  SlotConfig list;
  list.top_n = 2;

  std::vector<Answer> three = {Make("a", "d1", 0.6), Make("b", "d2", 0.9), Make("c", "d3", 0.7)};
  std::vector<Answer> one = RankAndTruncate(three, single);
  REQUIRE(one.size() == 1);
  CHECK(one[0].filler == "b");

  std::vector<Answer> two = RankAndTruncate(three, list);
  REQUIRE(two.size() == 2);
  CHECK(two[0].filler == "b");
  CHECK(two[1].filler == "c");

  std::vector<Answer> tied = RankAndTruncate({Make("x", "d9", 0.5), Make("y", "d1", 0.5)}, single);
  CHECK(tied[0].doc_id == "d1");

  std::vector<Answer> dup = RankAndTruncate({Make("x", "d1", 0.9), Make("x", "d2", 0.8), Make("y", "d3", 0.7)}, list);
  REQUIRE(dup.size() == 2);
  CHECK(dup[0].doc_id == "d1");
  CHECK(dup[1].filler == "y");
}

TEST_CASE("truncation never exceeds top N and keeps scores non-increasing") {
  Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    SlotConfig config;
    config.single_valued = rng.Uniform() < 0.3;
    config.top_n = 1 + static_cast<int>(rng.Index(4));
    std::vector<Answer> answers;
    for (int n = static_cast<int>(rng.Index(8)); n > 0; --n) {
      answers.push_back(Make("f" + std::to_string(rng.Index(5)), "d" + std::to_string(rng.Index(5)),
                             std::round(rng.Uniform() * 10) / 10));
    }
    std::vector<Answer> out = RankAndTruncate(answers, config);
    CHECK(out.size() <= (config.single_valued ? 1u : static_cast<size_t>(config.top_n)));
    for (size_t i = 1; i < out.size(); ++i) CHECK(out[i - 1].score >= out[i].score);
  }
}

}  // namespace
}  // namespace slotfill
