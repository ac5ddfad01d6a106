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
#include <optional>
#include <string>
#include <vector>

#include "idealcount/errors.hpp"

namespace idealcount {

/// Invariants of a number field. Immutable once validated.
struct FieldSpec {
  std::string label;
  int degree = 0;
  int r1 = 0;
  int r2 = 0;
  std::int64_t disc = 0;
  std::optional<std::vector<std::int64_t>> poly;  // monic, constant term first
  std::optional<std::int64_t> fundamental_disc;
  // Opaque metadata, read and written back but never computed.
  std::optional<std::int64_t> class_number;
  std::optional<double> regulator;
  std::optional<std::int64_t> roots_of_unity;
  // Non-fatal findings from validation (unknown keys, degree-1 field, ...).
  std::vector<std::string> warnings;

  bool is_rational() const noexcept { return degree == 1; }
};

/// Smallest admissible |disc| for degree n: exact minima for 2..7,
/// 184607 for n >= 8, 1 for n = 1.
std::int64_t delta0(int n);

/// D = 1 mod 4 squarefree, or D = 4m with m = 2, 3 mod 4 squarefree; D != 1.
bool is_fundamental_discriminant(std::int64_t d);

/// Checks every FieldSpec rule; throws InvariantViolation / DiscTooSmall and
/// appends warnings for soft findings.
void validate(FieldSpec& field);

FieldSpec parse_field(const std::string& json_text);
FieldSpec load_field(const std::string& path);
std::string serialize_field(const FieldSpec& field);

/// 2^{-r2} pi^{-n/2} |disc|^{1/2}
double compute_A_K(const FieldSpec& field);

}  // namespace idealcount
