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
#include <set>

#include "doctest.h"
#include "slotfill/retrieval.h"
#include "support/oracles.h"

namespace slotfill {
namespace {

DocumentStore TwoDocs() {
  DocumentStore store;
  store.Add(BuildDocument("d1", Genre::kNews, "Barack Obama"));
  store.Add(BuildDocument("d2", Genre::kNews, "Obama speech"));
  return store;
}

std::vector<std::string> Ids(const std::vector<RetrievalResult> &results) {
  std::vector<std::string> out;
  for (const RetrievalResult &r : results) out.push_back(r.doc_id);
  return out;
}

TEST_CASE("postings on a two-document store") {
  InvertedIndex index = InvertedIndex::Build(TwoDocs());
  REQUIRE(index.Postings("obama") != nullptr);
  CHECK(*index.Postings("obama") == std::vector<Posting>{{"d1", 1}, {"d2", 1}});
  CHECK(*index.Postings("barack") == std::vector<Posting>{{"d1", 1}});
  CHECK(index.Postings("Obama") == nullptr);
  CHECK(InvertedIndex::Build(DocumentStore{}).doc_count() == 0);
}

TEST_CASE("AND and OR queries") {
  InvertedIndex index = InvertedIndex::Build(TwoDocs());
  CHECK(Ids(index.QueryAnd({"barack", "obama"})) == std::vector<std::string>{"d1"});
  CHECK(index.QueryAnd({"barack", "michelle"}).empty());
  CHECK(index.QueryOr({"michelle", "hillary"}).empty());
  CHECK(Ids(index.QueryOr({"speech"})) == Ids(index.QueryAnd({"speech"})));

  // Equal lengths make the length norm 1 and the tf factor 1, leaving the
  // idf sums ln(1 + 1.5/1.5) + ln(1 + 0.5/2.5) and ln(1 + 0.5/2.5).
  std::vector<RetrievalResult> ranked = index.QueryOr({"barack", "obama"});
  REQUIRE(Ids(ranked) == std::vector<std::string>{"d1", "d2"});
  CHECK(ranked[0].score == doctest::Approx(std::log(2.4)).epsilon(1e-12));
  CHECK(ranked[1].score == doctest::Approx(std::log(1.2)).epsilon(1e-12));
}

TEST_CASE("query terms are case-insensitive and deduplicated") {
  InvertedIndex index = InvertedIndex::Build(TwoDocs());
  std::vector<RetrievalResult> a = index.QueryOr({"Obama", "obama"});
  std::vector<RetrievalResult> b = index.QueryOr({"obama"});
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].score == b[i].score);
}

TEST_CASE("entity retrieval") {
  DocumentStore store;
  for (int i = 0; i < 150; ++i) {
    std::string text = (i % 3 == 0) ? "Anna Keller spoke." : "Keller spoke.";
    store.Add(BuildDocument("doc" + std::to_string(1000 + i), Genre::kNews, text));
  }
  InvertedIndex index = InvertedIndex::Build(store);

  SUBCASE("cap of 100 documents, AND hits first and listed once") {
    std::vector<RetrievalResult> r = index.RetrieveForEntity("Anna Keller", std::nullopt, EntityType::kPER);
    CHECK(r.size() == InvertedIndex::kMaxDocsPerEntity);
    const std::vector<std::string> ids = Ids(r);
    std::set<std::string> unique(ids.begin(), ids.end());
    CHECK(unique.size() == r.size());
    for (size_t i = 0; i < 50; ++i) CHECK(r[i].matched_query == MatchedQuery::kAndName);
    CHECK(r[50].matched_query == MatchedQuery::kOrName);
  }
  SUBCASE("GPE entities use AND queries only") {
    std::vector<RetrievalResult> r = index.RetrieveForEntity("Anna Keller", std::nullopt, EntityType::kGPE);
    CHECK(r.size() == 50);
    for (const RetrievalResult &x : r) CHECK(x.matched_query == MatchedQuery::kAndName);
  }
  SUBCASE("the IR alias contributes its own AND tier") {
    std::vector<RetrievalResult> r = index.RetrieveForEntity("Anna Smith", std::string("Keller"), EntityType::kGPE);
    CHECK(r.size() == InvertedIndex::kMaxDocsPerEntity);
    CHECK(r[0].matched_query == MatchedQuery::kAndAlias);
  }
}

TEST_CASE("index round-trips through JSON") {
  InvertedIndex index = InvertedIndex::Build(TwoDocs());
  InvertedIndex copy = InvertedIndex::FromJson(index.ToJson());
  CHECK(copy.postings() == index.postings());
  CHECK(copy.doc_lengths() == index.doc_lengths());
  std::vector<RetrievalResult> a = index.QueryOr({"barack", "obama"});
  std::vector<RetrievalResult> b = copy.QueryOr({"barack", "obama"});
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].score == b[i].score);
}

TEST_CASE("random corpora agree with a linear scan") {
  for (uint64_t seed = 101; seed <= 120; ++seed) {
    CAPTURE(seed);
    CHECK(testing::CheckRetrievalAgainstScan(seed, 50) == "");
  }
  CHECK(testing::CheckRetrievalAgainstScan(7, 1000) == "");
}

}  // namespace
}  // namespace slotfill
