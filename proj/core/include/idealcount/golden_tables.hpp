/*
   Copyright 2026 The idealcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace idealcount {

enum class TableId { T1, T2, T3, T4, T5 };

std::string to_string(TableId id);
/// Accepts "T1".."T5" (case-insensitive); throws ParseError otherwise.
TableId parse_table_id(const std::string& text);

struct GoldenRow {
  int n = 0;                        // degree, or N0 for T3
  std::vector<std::string> printed; // one entry per column, as printed
  std::int64_t disc_floor = 0;      // T4 only: |disc| used for v1/v3 (0 = delta0(min(n,7)))
  std::string note;
};

struct GoldenTable {
  TableId id;
  std::string title;
  std::vector<std::string> columns;
  std::vector<GoldenRow> rows;
};

/// Published six-digit values for the five reference tables.
const GoldenTable& golden_table(TableId id);

}  // namespace idealcount
