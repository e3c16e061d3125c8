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


#include <algorithm>

#include "doctest.h"
#include "slotfill/traindata.h"
#include "support/synthetic.h"

namespace slotfill {
namespace {

using Words = std::vector<std::string>;

DocumentStore Store(const std::vector<std::string> &texts) {
  DocumentStore store;
  for (size_t i = 0; i < texts.size(); ++i) store.Add(BuildDocument("d" + std::to_string(i), Genre::kNews, texts[i]));
  return store;
}

EntityTagger Tagger() {
  Gazetteers g;
  for (const char *p : {"Obama", "Anna Keller"}) g.Add(NeType::kPER, p);
  for (const char *p : {"Honolulu", "Paris", "Munich"}) g.Add(NeType::kGPE, p);
  return EntityTagger(std::move(g));
}

TEST_CASE("surface search") {
  Words w = {"Anna", "Keller", "met", "anna", "keller", "."};
  CHECK(FindSurface(w, "Anna Keller") == std::vector<std::pair<int, int>>{{0, 2}, {3, 5}});
  CHECK(FindSurface(w, "Paul").empty());
  CHECK(FindSurface(w, "").empty());
}

TEST_CASE("relation instances") {
  std::vector<RelationInstance> kb = ParseRelationInstances("Obama\tper:location_of_birth\tHonolulu\n\n");
  REQUIRE(kb.size() == 1);
  CHECK(kb[0].object == "Honolulu");
  CHECK_THROWS_AS(ParseRelationInstances("Obama\tper:location_of_birth\n"), Error);
}

TEST_CASE("distant supervision positives") {
  const std::vector<RelationInstance> kb = {{"Obama", "per:location_of_birth", "Honolulu"},
                                            {"Anna Keller", "per:location_of_birth", "Munich"},
                                            {"Obama", "per:employee_or_member_of", "Senate"}};
  SUBCASE("one sentence with both arguments") {
    std::vector<LabeledExample> p = GeneratePositiveExamples(Store({"Obama was born in Honolulu ."}), kb, "per:location_of_birth");
    REQUIRE(p.size() == 1);
    CHECK(p[0].label == 1);
    CHECK(p[0].context.middle == Words{"was", "born", "in"});
  }
  SUBCASE("one argument only") {
    CHECK(GeneratePositiveExamples(Store({"Obama spoke in Paris ."}), kb, "per:location_of_birth").empty());
  }
  SUBCASE("two instances in one sentence") {
    std::vector<LabeledExample> p = GeneratePositiveExamples(
        Store({"Obama , born in Honolulu , met Anna Keller of Munich ."}), kb, "per:location_of_birth");
    CHECK(p.size() == 2);
  }
}

TEST_CASE("distant supervision negatives") {
  const std::vector<RelationInstance> kb = {{"Obama", "per:location_of_birth", "Honolulu"}};
  TriggerSet triggers = TriggerSet::Parse("per:location_of_birth\tborn\nper:location_of_birth\tnative of\n");
  NegativeSpec spec{"per:location_of_birth", NeType::kPER, NeType::kGPE};
  EntityTagger tagger = Tagger();
  auto negatives = [&](const std::string &text) {
    return GenerateNegativeExamples(Store({text}), kb, spec, tagger, triggers);
  };
  CHECK(negatives("Obama visited Paris .").size() == 1);
  CHECK(negatives("Obama was born in Paris .").empty());
  CHECK(negatives("Obama , a native of Paris , spoke .").empty());
  CHECK(negatives("Obama flew to Honolulu .").empty());
  for (const LabeledExample &e : negatives("Anna Keller visited Paris and Munich .")) CHECK(e.label == 0);
}

TEST_CASE("template triggers") {
  TriggerSet t = TriggerSet::Parse("per:spouse\t<ENTITY> *2 married <FILLER>\n");
  RelationContext yes{{}, {"has", "married"}, {}, true};
  RelationContext no{{}, {"married"}, {}, false};
  CHECK(t.Fires("per:spouse", {"X", "has", "married", "Y"}, yes));
  CHECK_FALSE(t.Fires("per:spouse", {"Y", "married", "X"}, no));
  CHECK_FALSE(t.Fires("per:age", {"X", "has", "married", "Y"}, yes));
}

TEST_CASE("examples round-trip through JSON Lines") {
  std::vector<LabeledExample> examples = {
      {{{"The"}, {"was", "born", "in"}, {"."}, true}, 1, ExampleOrigin::kSeed, "per:location_of_birth"},
      {{{}, {}, {}, false}, 0, ExampleOrigin::kSelected, "per:age"},
  };
  std::vector<LabeledExample> copy = ParseExamples(ExamplesToJsonl(examples));
  REQUIRE(copy.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(copy[i].context == examples[i].context);
    CHECK(copy[i].label == examples[i].label);
    CHECK(copy[i].origin == examples[i].origin);
    CHECK(copy[i].slot == examples[i].slot);
  }
  CHECK_THROWS_AS(ParseExamples("{\"middle\": []}\n"), Error);
}

std::string Key(const RelationContext &c) { return Join(MarkedSequence(c), " "); }

TEST_CASE("selection improves purity on noisy data") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    CAPTURE(seed);
    testing::NoisyData data = testing::MakeNoisyData(seed);
    SelectionConfig config;
    config.seed = seed;
    SelectionResult r = SelectTrainingData(data.noisy, data.seed, config);
    REQUIRE_FALSE(r.selected.empty());
    CHECK(testing::Purity(r.selected, data) >= 0.85);
    CHECK(testing::Purity(r.selected, data) >= testing::InputPurity(data));
    for (const LabeledExample &e : r.selected) CHECK(e.origin == ExampleOrigin::kSelected);
  }
}

TEST_CASE("selection edge cases") {
  testing::NoisyData data = testing::MakeNoisyData(5, 60);

  SUBCASE("one batch filters everything with the seed model") {
    SelectionConfig config;
    config.k = 1;
    SelectionResult r = SelectTrainingData(data.noisy, data.seed, config);
    LinearModel seed_model = SvmTrain(AsPairs(data.seed), config.svm);
    std::multiset<std::string> expected, got;
    for (const LabeledExample &e : data.noisy) {
      const double s = seed_model.Score(e.context);
      if ((s >= 0.5) == (e.label == 1) && std::max(s, 1.0 - s) >= config.tau) expected.insert(Key(e.context));
    }
    for (const LabeledExample &e : r.selected) got.insert(Key(e.context));
    CHECK(got == expected);
  }
  SUBCASE("an unreachable confidence selects nothing") {
    SelectionConfig config;
    config.tau = 1.0;
    CHECK(SelectTrainingData(data.noisy, data.seed, config).selected.empty());
  }
  SUBCASE("k larger than the data shrinks with a warning") {
    SelectionConfig config;
    config.k = 100;
    SelectionResult r = SelectTrainingData(data.noisy, data.seed, config);
    CHECK(r.warnings.size() == 1);
  }
  SUBCASE("selection needs seed data") {
    CHECK_THROWS_AS(SelectTrainingData(data.noisy, {}, SelectionConfig{}), Error);
  }
  SUBCASE("selected examples keep their observed labels") {
    SelectionResult r = SelectTrainingData(data.noisy, data.seed, SelectionConfig{});
    std::multiset<std::pair<std::string, int>> pool;
    for (const LabeledExample &e : data.noisy) pool.insert({Key(e.context), e.label});
    for (const LabeledExample &e : r.selected) CHECK(pool.count({Key(e.context), e.label}) > 0);
  }
}

}  // namespace
}  // namespace slotfill
