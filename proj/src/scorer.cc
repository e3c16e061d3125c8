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
#include <tuple>

#include "slotfill/pipeline.h"

namespace slotfill {
namespace {

using Key = std::tuple<std::string, int, std::string, std::string>;

std::set<Key> Keys(const std::vector<OutputRow> &rows) {
  std::set<Key> keys;
  for (const OutputRow &r : rows) keys.emplace(r.query_id, r.hop, r.slot, ToLower(r.filler));
  return keys;
}

}  // namespace

std::vector<OutputRow> ParseOutputRows(std::string_view tsv) {
  std::vector<OutputRow> rows;
  int number = 0;
  for (const std::string &line : Split(tsv, '\n')) {
    ++number;
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() < 4 || !IsDigits(f[1])) {
      throw Error("output line " + std::to_string(number) + ": expected query_id, hop, slot, filler");
    }
    rows.push_back({f[0], std::stoi(f[1]), f[2], f[3]});
  }
  return rows;
}

std::vector<OutputRow> LoadOutputRows(const std::string &path) { return ParseOutputRows(ReadFile(path)); }

double F1(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

double RoundPercent(double value) { return std::round(value * 100.0) / 100.0; }

EvalResult ScoreOutput(const std::vector<OutputRow> &system, const std::vector<OutputRow> &gold) {
  std::set<Key> s = Keys(system), g = Keys(gold);
  EvalResult r;
  for (const Key &k : s) r.counts.tp += g.count(k) ? 1 : 0;
  r.counts.fp = static_cast<int>(s.size()) - r.counts.tp;
  r.counts.fn = static_cast<int>(g.size()) - r.counts.tp;
  if (!s.empty()) r.precision = 100.0 * r.counts.tp / s.size();
  if (!g.empty()) r.recall = 100.0 * r.counts.tp / g.size();
  r.f1 = F1(r.precision, r.recall);
  return r;
}

}  // namespace slotfill
