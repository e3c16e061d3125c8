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


#include <cstdlib>

#include "doctest.h"
#include "slotfill/util.h"

namespace slotfill {
namespace {

TEST_CASE("string helpers") {
  CHECK(ToLower("MuNich") == "munich");
  CHECK(Trim("  a b \t\n") == "a b");
  CHECK(Trim("   ").empty());
  CHECK(Split("a\t\tb", '\t') == std::vector<std::string>{"a", "", "b"});
  CHECK(SplitWhitespace("  a  b\tc ") == std::vector<std::string>{"a", "b", "c"});
  CHECK(Join({"x", "y", "z"}, ", ") == "x, y, z");
  CHECK(StartsWith("per:age", "per:"));
  CHECK_FALSE(EndsWith("per:age", "per"));
  CHECK(IsPunctuation(","));
  CHECK_FALSE(IsPunctuation("a,"));
  CHECK(IsDigits("1971"));
  CHECK_FALSE(IsDigits("1,200"));
}

TEST_CASE("FNV-1a matches the published 64-bit test vectors") {
  CHECK(Fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(Fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(Fnv1a("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("fixed formatting rounds half away from truncation") {
  CHECK(FormatFixed(0.5, 2) == "0.50");
  CHECK(FormatFixed(200.0 / 3.0, 2) == "66.67");
  CHECK(FormatFixed(0.95916, 4) == "0.9592");
}

TEST_CASE("seed comes from the environment when set") {
  unsetenv("SF_SEED");
  CHECK(SeedFromEnv(7) == 7);
  setenv("SF_SEED", "42", 1);
  CHECK(SeedFromEnv(7) == 42);
  unsetenv("SF_SEED");
}

}  // namespace
}  // namespace slotfill
