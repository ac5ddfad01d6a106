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

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idealcount/errors.hpp"

namespace idealcount::cli {

enum class Command { constants, table, count, verify, integral, probe };
enum class Format { csv, json };

/// Bad or missing command-line input; maps to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  Command command = Command::constants;
  std::optional<std::string> field_path;
  std::optional<std::pair<int, int>> n_range;
  std::optional<double> x_max;  // --x for count, --xmax for verify
  std::optional<double> tol;
  Format format = Format::csv;
  std::optional<std::string> out_path;

  std::optional<std::string> table_id;
  bool check = false;
  std::optional<int> points;
  std::optional<double> eta;  // absent: sweep the eta grid
  std::string probe_name;
  std::vector<double> uppers;
  std::vector<double> mus;
  std::optional<std::string> cache_path;
  std::optional<std::string> summary_path;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// "A..B" or a single "A".
std::pair<int, int> parse_n_range(const std::string& text);

/// Throws UsageError when a command is missing what it needs.
void check_config(const RunConfig& config);

/// Dispatches one command. Results go to `out` (or config.out_path),
/// diagnostics to `err`. Never throws.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// CSV column reference shown in --help.
std::string columns_help(Command command);

}  // namespace idealcount::cli
