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


#include <cmath>

#include "doctest.h"
#include "slotfill/query.h"
#include "support/oracles.h"

namespace slotfill {
namespace {

TEST_CASE("edit distance") {
  CHECK(Levenshtein("kitten", "sitting") == 3);
  CHECK(Levenshtein("", "abc") == 3);
  CHECK(Levenshtein("abc", "") == 3);
  CHECK(Levenshtein("Obama", "Obama") == 0);
  CHECK(Levenshtein("Barack Obama", "Barak Obama") == 1);
}

TEST_CASE("edit distance agrees with the full DP table") {
  const std::vector<std::string> words = {"", "a", "ab", "ba", "abc", "keller", "kellner", "munich", "münchen"};
  for (const std::string &a : words) {
    for (const std::string &b : words) CHECK(Levenshtein(a, b) == testing::EditDistanceDp(a, b));
  }
}

TEST_CASE("alias cleaning") {
  NicknameTable nicknames;
  nicknames.Add("William", "Bill");

  SUBCASE("organizations gain legal suffixes") {
    std::vector<std::string> a = CleanAliases("Apple", {}, EntityType::kORG, nicknames);
    CHECK(a == std::vector<std::string>{"Apple Corp", "Apple Co", "Apple Inc"});
  }
  SUBCASE("too short or wrongly typed aliases are dropped") {
    std::vector<std::string> a = CleanAliases(
        "William Gates", {{"X", ""}, {"Seattle", "GPE"}, {"W. Gates", "PER"}, {"Gates", ""}}, EntityType::kPER,
        nicknames);
    CHECK(a == std::vector<std::string>{"W. Gates", "Gates", "Bill Gates"});
  }
}

TEST_CASE("IR alias selection") {
  CHECK(SelectIrAlias("Barack Obama", {"Barak Obama", "President Obama"}) == "Barak Obama");
  CHECK_FALSE(SelectIrAlias("Barack Obama", {}).has_value());
  CHECK(SelectIrAlias("abc", {"abd", "abb"}) == "abb");
}

TEST_CASE("query parsing") {
  std::vector<SlotQuery> q = ParseQueries(
      "{\"id\": \"Q1\", \"name\": \"Anna Keller\", \"type\": \"PER\", \"slot\": \"per:schools_attended\", "
      "\"hop\": 0, \"hop1_slot\": \"org:city_of_headquarters\"}\n\n");
  REQUIRE(q.size() == 1);
  CHECK(q[0].entity_type == EntityType::kPER);
  CHECK(q[0].hop1_slot == "org:city_of_headquarters");
  CHECK_THROWS_AS(ParseQueries("{\"id\": \"Q1\"}"), Error);
  CHECK_THROWS_AS(ParseQueries("not json"), Error);
}

KnowledgeBase AppleKb() {
  KBEntry fruit{"K1", "Apple", {}, {}};
  AddTerms("fruit tree", &fruit.description_terms);
  KBEntry company{"K2", "Apple", {"Apple Inc"}, {}};
  AddTerms("iphone maker ceo", &company.description_terms);
  return KnowledgeBase({fruit, company});
}

TEST_CASE("entity linking by context cosine") {
  KnowledgeBase kb = AppleKb();
  TermBag context{{"iphone", 1}, {"ceo", 1}};
  SlotQuery q;
  q.entity_name = "Apple";
  q.entity_type = EntityType::kORG;
  CHECK(LinkEntity(q, kb, context) == "K2");

  // Every term occurs in one of two entries, so all idf weights are equal and
  // cancel: two shared terms over sqrt(2) * sqrt(3).
  CHECK(kb.Cosine(context, *kb.Find("K2")) == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-12));
  CHECK(kb.Cosine(context, *kb.Find("K1")) == 0.0);

  q.entity_name = "Pear";
  CHECK_FALSE(LinkEntity(q, kb, context).has_value());
  CHECK(kb.Candidates("apple inc").size() == 1);
}

TEST_CASE("document gate") {
  KnowledgeBase kb = AppleKb();
  const KBEntry &company = *kb.Find("K2");
  TermBag about_company{{"ceo", 2}, {"maker", 1}};
  TermBag about_fruit{{"fruit", 1}, {"tree", 2}};
  CHECK(DocumentMatchesEntity(about_company, company, kb, "Apple"));
  CHECK_FALSE(DocumentMatchesEntity(about_fruit, company, kb, "Apple"));
  // Nothing to tell apart: keep the document.
  CHECK(DocumentMatchesEntity(TermBag{}, company, kb, "Apple"));
  CHECK(DocumentMatchesEntity(about_fruit, company, kb, "Apple Inc"));
  CHECK(DocumentMatchesEntity(about_fruit, company, kb, "Banana Republic"));
}

TEST_CASE("duplicate KB ids are rejected") {
  KBEntry a{"K1", "A", {}, {{"x", 1}}};
  CHECK_THROWS_AS(KnowledgeBase({a, a}), Error);
}

}  // namespace
}  // namespace slotfill
