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

#ifndef SLOTFILL_UTIL_H_
#define SLOTFILL_UTIL_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slotfill {

// Raised for unrecoverable input or usage errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A recoverable problem tied to a line of an input file.
struct LineError {
  int line = 0;
  std::string message;
};

std::string ToLower(std::string_view s);
std::string Trim(std::string_view s);
std::vector<std::string> Split(std::string_view s, char sep);
std::vector<std::string> SplitWhitespace(std::string_view s);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);
bool StartsWith(std::string_view s, std::string_view prefix);
bool EndsWith(std::string_view s, std::string_view suffix);

// True if every character is ASCII punctuation (and s is nonempty).
bool IsPunctuation(std::string_view s);
bool IsDigits(std::string_view s);

// Reads a whole file; throws Error when it cannot be opened.
std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, std::string_view contents);

// Reads the lines of a file, without trailing newline or carriage return.
std::vector<std::string> ReadLines(const std::string &path);

// Reads a TSV file, skipping blank lines and lines starting with '#'.
// Each returned row carries its 1-based line number.
struct TsvRow {
  int line = 0;
  std::vector<std::string> fields;
};
std::vector<TsvRow> ReadTsv(const std::string &path);

// 64-bit FNV-1a; stable across platforms, used for feature hashing.
uint64_t Fnv1a(std::string_view s);

// Base seed, overridden by the SF_SEED environment variable when set.
uint64_t SeedFromEnv(uint64_t fallback);

// Formats a real with a fixed number of decimals.
std::string FormatFixed(double value, int decimals);

}  // namespace slotfill

#endif  // SLOTFILL_UTIL_H_
