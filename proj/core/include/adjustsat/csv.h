// Copyright 2026 The AdjustSat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADJUSTSAT_CSV_H_
#define ADJUSTSAT_CSV_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adjustsat::csv {

struct Row {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// RFC 4180 records: quoted fields may hold commas, doubled quotes and line
// breaks; CRLF and LF both end a record; blank lines are skipped. Throws
// kMalformedInput for an unterminated quote or stray text after one.
std::vector<Row> Parse(std::string_view text);

// Quotes the field only when it needs it.
std::string Quote(std::string_view field);
// Joined with commas, terminated by "\n".
std::string FormatRow(std::span<const std::string> fields);

// Strict numeric field parsing; throws kMalformedInput naming `what`.
double ParseDouble(std::string_view s, std::string_view what);
long long ParseInt(std::string_view s, std::string_view what);

}  // namespace adjustsat::csv

#endif  // ADJUSTSAT_CSV_H_
