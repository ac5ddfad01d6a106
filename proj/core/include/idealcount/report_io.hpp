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

#include <string>
#include <vector>

#include "idealcount/constants.hpp"
#include "idealcount/ideal_counter.hpp"
#include "idealcount/log_magnitude.hpp"
#include "idealcount/quadrature.hpp"
#include "idealcount/verifier.hpp"

namespace idealcount {

/// Six significant digits, uppercase exponent, round-half-even: "1.75425E+30".
std::string csv_number(double value);
std::string csv_number(const LogMagnitude& value);

std::string constants_csv(const std::vector<ConstantRow>& rows);
std::string constants_json(const std::vector<ConstantRow>& rows);

std::string table_csv(const TableReport& report);
std::string table_json(const TableReport& report);

std::string bound_csv(const BoundReport& report);
std::string bound_json(const BoundReport& report);

struct CountSummary {
  std::string label;
  double x = 0.0;
  std::uint64_t ideal_count = 0;
  std::uint64_t table_limit = 0;
  std::uint32_t tau_max = 0;
  std::uint64_t tau_max_at = 0;
  std::uint64_t zero_count = 0;  // m <= x with tau_m = 0
};
CountSummary summarize_count(const TauTable& table, double x);
std::string count_csv(const CountSummary& s);
std::string count_json(const CountSummary& s);

struct IntegralRow {
  double eta = 0.0;
  QuadratureResult result;
};
/// One row per eta; the JSON form also carries the verdict and the argmax.
std::string integral_csv(const std::vector<IntegralRow>& rows);
std::string integral_json(const std::vector<IntegralRow>& rows, double tol, bool pass);

std::string probe_csv(const std::vector<ProbeRow>& rows);
std::string probe_json(const std::vector<ProbeRow>& rows);

/// {check_name, pass, worst_case, details_path}
std::string summary_json(const std::string& check_name, bool pass, double worst_case, const std::string& details_path);

}  // namespace idealcount
