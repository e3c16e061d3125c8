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


#include "doctest.h"
#include "slotfill/corpus.h"

namespace slotfill {
namespace {

std::vector<std::string> Texts(const std::vector<Token> &tokens) {
  std::vector<std::string> out;
  for (const Token &t : tokens) out.push_back(t.text);
  return out;
}

TEST_CASE("tokenizer splits clitics and punctuation") {
  CHECK(Texts(Tokenize("Obama's wife, Jane.")) ==
        std::vector<std::string>{"Obama", "'s", "wife", ",", "Jane", "."});
  CHECK(Tokenize("").empty());
  CHECK(Texts(Tokenize("U.S.-based")) == std::vector<std::string>{"U.S.-based"});
  CHECK(Texts(Tokenize("Dr. Smith")) == std::vector<std::string>{"Dr.", "Smith"});
}

TEST_CASE("token offsets index the text") {
  const std::string text = "Lumex Corp, a maker based in Berlin, hired 1,200 people on March 4, 1971.";
  std::vector<Token> tokens = Tokenize(text);
  REQUIRE_FALSE(tokens.empty());
  size_t last = 0;
  for (const Token &t : tokens) {
    CHECK(t.char_start < t.char_end);
    CHECK(t.char_start >= last);
    CHECK(text.substr(t.char_start, t.char_end - t.char_start) == t.text);
    last = t.char_end;
  }
}

TEST_CASE("sentence splitting honours abbreviations") {
  CHECK(SplitSentences("Dr. Smith arrived. He left.", Genre::kNews).size() == 2);
  CHECK(SplitSentences("", Genre::kNews).empty());
  CHECK(SplitSentences("line one\nline two", Genre::kForum).size() == 2);
  CHECK(SplitSentences("line one\nline two", Genre::kNews).size() == 1);
}

TEST_CASE("forum preprocessing") {
  std::vector<std::string> warnings;
  CHECK(RemoveQuotes("A <quote>B</quote> C", &warnings) == "A  C");
  CHECK(warnings.empty());

  Document forum = BuildDocument("f1", Genre::kForum, "I used the sErVice <quote>Quoted Name</quote> today.");
  CHECK(forum.text.find("Quoted") == std::string::npos);
  CHECK(forum.text.find("service") != std::string::npos);
  for (const Sentence &s : forum.sentences) {
    for (const Token &t : s.tokens) CHECK(t.text != "sErVice");
  }

  const std::string raw = "Anna Keller was born in Munich. She left.";
  Document news = BuildDocument("n1", Genre::kNews, raw);
  CHECK(news.text == raw);
  REQUIRE(news.sentences.size() == 2);
  CHECK(news.sentences[0].index == 0);
  CHECK(news.sentences[1].index == 1);
}

TEST_CASE("unbalanced quote markup is reported") {
  std::vector<std::string> warnings;
  RemoveQuotes("A <quote>B never closed", &warnings);
  CHECK_FALSE(warnings.empty());
}

TEST_CASE("ingest") {
  SUBCASE("one news and one forum document") {
    IngestResult r = IngestDocumentsFromString(
        "{\"id\": \"a\", \"genre\": \"news\", \"text\": \"One.\"}\n"
        "{\"id\": \"b\", \"genre\": \"forum\", \"text\": \"Two\"}\n");
    CHECK(r.store.size() == 2);
    CHECK(r.errors.empty());
    CHECK(r.store.Find("b")->genre == Genre::kForum);
  }
  SUBCASE("empty input") {
    IngestResult r = IngestDocumentsFromString("");
    CHECK(r.store.empty());
  }
  SUBCASE("a malformed line is skipped and reported") {
    IngestResult r = IngestDocumentsFromString(
        "{\"id\": \"a\", \"genre\": \"news\", \"text\": \"One.\"}\n"
        "{not json\n"
        "{\"id\": \"c\", \"genre\": \"news\", \"text\": \"Three.\"}\n");
    CHECK(r.store.size() == 2);
    REQUIRE(r.errors.size() == 1);
    CHECK(r.errors[0].line == 2);
  }
}

TEST_CASE("store rejects duplicate ids") {
  DocumentStore store;
  store.Add(BuildDocument("a", Genre::kNews, "One."));
  CHECK_THROWS_AS(store.Add(BuildDocument("a", Genre::kNews, "Two.")), Error);
  CHECK(store.Find("missing") == nullptr);
}

}  // namespace
}  // namespace slotfill
