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


#include <filesystem>
#include <set>

#include "doctest.h"
#include "slotfill/pipeline.h"
#include "slotfill/retrieval.h"
#include "support/mini.h"
#include "support/oracles.h"

namespace fs = std::filesystem;

namespace slotfill {
namespace {

TEST_CASE("run configurations") {
  RunConfig r1 = ConfigureRun(1);
  CHECK(r1.threshold_bonus == 0.2);
  CHECK(r1.Uses(ClassifierKind::kCnn));
  CHECK_FALSE(r1.Uses(ClassifierKind::kRnn));
  CHECK(ConfigureRun(2).threshold_bonus == 0.0);
  CHECK(ConfigureRun(3).Uses(ClassifierKind::kRnn));
  CHECK(ConfigureRun(4).entity_linking);
  CHECK_FALSE(ConfigureRun(2).entity_linking);
  CHECK(ConfigureRun(5).classifiers == std::vector<ClassifierKind>{ClassifierKind::kPattern, ClassifierKind::kSvm});
  for (int run = 1; run <= 5; ++run) CHECK(ConfigureRun(run).coref_enabled);
  CHECK_THROWS_AS(ConfigureRun(6), Error);
}

std::vector<OutputRow> Rows(std::initializer_list<OutputRow> rows) { return rows; }

TEST_CASE("scoring") {
  const std::vector<OutputRow> gold = Rows({{"Q1", 0, "per:age", "45"},
                                            {"Q2", 0, "per:title", "chef"},
                                            {"Q3", 0, "per:spouse", "Paul Keller"},
                                            {"Q3", 1, "per:age", "50"}});
  EvalResult r = ScoreOutput(Rows({{"Q1", 0, "per:age", "45"}, {"Q2", 0, "per:title", "CHEF"}, {"Q3", 0, "per:spouse", "Anna"}}),
                             gold);
  CHECK(r.counts.tp == 2);
  CHECK(r.counts.fp == 1);
  CHECK(r.counts.fn == 2);
  CHECK(r.precision == doctest::Approx(200.0 / 3.0));
  CHECK(r.recall == doctest::Approx(50.0));
  CHECK(r.f1 == doctest::Approx(400.0 / 7.0));

  EvalResult empty = ScoreOutput({}, gold);
  CHECK(empty.precision == 0.0);
  CHECK(empty.recall == 0.0);
  CHECK(empty.f1 == 0.0);

  EvalResult wrong = ScoreOutput(Rows({{"Q9", 0, "per:age", "1"}}), gold);
  CHECK(wrong.precision == 0.0);
  CHECK(wrong.counts.fp == 1);

  // The hop is part of the key.
  CHECK(ScoreOutput(Rows({{"Q1", 1, "per:age", "45"}}), gold).counts.tp == 0);
}

TEST_CASE("F1 from printed precision and recall") {
  CHECK(F1(23.99, 16.65) == doctest::Approx(19.66).epsilon(0.0005));
  CHECK(F1(31.67, 23.97) == doctest::Approx(27.29).epsilon(0.0005));
  CHECK(F1(42.0, 42.0) == doctest::Approx(42.0));
  CHECK(F1(0.0, 0.0) == 0.0);
  for (const auto *table : {&testing::RunResultsTable(), &testing::CorefTable()}) {
    for (const testing::PrintedRow &row : *table) {
      CAPTURE(row.label);
      CHECK(std::abs(F1(row.precision, row.recall) - row.f1) <= 0.02);
    }
  }
  CHECK(testing::RunResultsTable().size() == 15);
  CHECK(testing::CorefTable().size() == 6);
  CHECK(RoundPercent(81.818181) == doctest::Approx(81.82));
}

TEST_CASE("output rows") {
  Answer a;
  a.query_id = "Q1";
  a.slot = "per:age";
  a.filler = "45";
  a.doc_id = "d1";
  a.score = 0.98765;
  CHECK(FormatAnswers({a}) == "Q1\t0\tper:age\t45\td1\t0.9877\n");
  std::vector<OutputRow> rows = ParseOutputRows(FormatAnswers({a}) + "\n# note\n");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].filler == "45");
  CHECK_THROWS_AS(ParseOutputRows("Q1\tzero\tper:age\t45\n"), Error);
}

// Pattern and SVM models for the mini-corpus, trained once.
struct MiniRun {
  Resources resources = Resources::LoadDir(testing::MiniDataDir());
  std::vector<SlotQuery> queries = LoadQueries(testing::MiniDataDir() + "/queries.jsonl");
  std::string model_dir = (fs::temp_directory_path() / "slotfill_pipeline_test").string();
  ModelStore models;

  MiniRun() {
    fs::remove_all(model_dir);
    testing::TrainMiniModels(resources, testing::QueriedCanonicalSlots(resources, queries),
                             {ClassifierKind::kPattern, ClassifierKind::kSvm}, model_dir);
    models = ModelStore::LoadDir(model_dir);
  }
  ~MiniRun() { fs::remove_all(model_dir); }
};

MiniRun &Mini() {
  static MiniRun run;
  return run;
}

std::set<std::string> Keys(const std::string &tsv) {
  std::set<std::string> out;
  for (const OutputRow &r : ParseOutputRows(tsv)) out.insert(r.query_id + "|" + std::to_string(r.hop) + "|" + r.slot + "|" + r.filler);
  return out;
}

TEST_CASE("mini-corpus with patterns and SVMs") {
  MiniRun &mini = Mini();
  const std::string run5 = testing::RunQueries(mini.resources, mini.models, mini.queries, ConfigureRun(5));
  EvalResult r = ScoreOutput(ParseOutputRows(run5), LoadOutputRows(testing::MiniDataDir() + "/gold.tsv"));
  CHECK(r.counts.tp >= 9);
  CHECK(r.counts.fp == 0);

  RunConfig strict = ConfigureRun(5);
  strict.threshold_bonus = kHighPrecisionBonus;
  const std::set<std::string> loose = Keys(run5);
  for (const std::string &k : Keys(testing::RunQueries(mini.resources, mini.models, mini.queries, strict))) {
    CHECK(loose.count(k));
  }

  SUBCASE("cold start feeds hop-0 fillers into hop 1") {
    InvertedIndex index = InvertedIndex::Build(mini.resources.store);
    SlotFiller filler(mini.resources, index, mini.models);
    const SlotQuery *q6 = nullptr;
    for (const SlotQuery &q : mini.queries) {
      if (q.hop1_slot) q6 = &q;
    }
    REQUIRE(q6 != nullptr);
    std::vector<Answer> answers = filler.RunColdStart(*q6, ConfigureRun(5));
    REQUIRE(answers.size() == 2);
    CHECK(answers[0].filler == "University of Munich");
    CHECK(answers[1].hop == 1);
    CHECK(answers[1].parent_filler == "University of Munich");
    CHECK(answers[1].filler == "Munich");

    SlotQuery nobody = *q6;
    nobody.entity_name = "Nobody Anywhere";
    CHECK(filler.RunColdStart(nobody, ConfigureRun(5)).empty());
    CHECK(filler.RunQuery(nobody, ConfigureRun(5)).empty());
  }
  SUBCASE("missing classifiers are named") {
    InvertedIndex index = InvertedIndex::Build(mini.resources.store);
    SlotFiller filler(mini.resources, index, mini.models);
    CHECK_THROWS_WITH_AS(filler.CheckModels("per:city_of_birth", ConfigureRun(2)),
                         doctest::Contains("per:city_of_birth"), Error);
    CHECK_NOTHROW(filler.CheckModels("per:city_of_birth", ConfigureRun(5)));
  }
}

}  // namespace
}  // namespace slotfill
