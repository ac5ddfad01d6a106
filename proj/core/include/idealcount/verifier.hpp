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
#include <functional>
#include <string>
#include <vector>

#include "idealcount/field.hpp"
#include "idealcount/golden_tables.hpp"
#include "idealcount/ideal_counter.hpp"
#include "idealcount/log_magnitude.hpp"
#include "idealcount/residue.hpp"

namespace idealcount {

inline constexpr double kTableTolerance = 1e-5;

struct TableCell {
  std::string column;
  LogMagnitude computed;
  std::string printed;
  double rel_diff = 0.0;
  bool ok = false;
};

struct TableRow {
  int n = 0;
  std::vector<TableCell> cells;
  std::string note;
  bool extra_ok = true;  // T4: v-sum <= Q1 in this row
};

struct TableReport {
  TableId id = TableId::T1;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
  double worst_rel_diff = 0.0;
  bool pass = false;
};

/// Recompute every cell and compare at relative 1e-5 (T3: exact integers).
TableReport reproduce_table(TableId id);

struct PartialSumCheck {
  double theta = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};

struct BoundPoint {
  double x = 0.0;
  std::uint64_t ideal_count = 0;
  double kappa_x = 0.0;
  double error = 0.0;
  LogMagnitude rhs_improved;
  LogMagnitude rhs_sunley;
  double ratio = 0.0;
  bool beyond_disc = false;  // x > |disc|: Q1 and partial-sum checks apply
  double q1_rhs = 0.0;       // Q1 (log|disc|)^{n-1} x
  bool q1_ok = true;
  PartialSumCheck below1, above1, log_case;
};

struct BoundReport {
  std::string label;
  int degree = 0;
  Residue kappa;
  std::vector<BoundPoint> points;
  double max_ratio = 0.0;
  double observed_c = 0.0;  // max error / x^{1 - 2/(n+1)}
  bool auxiliary_ok = true; // Q1 and partial-sum checks
  bool pass = false;
};

/// Geometric grid from max(2, |disc|+1) to x_max (`points` values).
std::vector<double> bound_grid(const FieldSpec& field, double x_max, int points);

/// Compare I(x) - kappa x with the improved theorem bound on the grid.
/// Needs table.X() >= x_max.
BoundReport bound_report(const TauTable& table, const Residue& kappa, double x_max, int points);
/// Sieves to x_max and takes kappa exactly for quadratic fields, empirically otherwise.
BoundReport bound_report(const FieldSpec& field, double x_max, int points);

/// sum_{m <= x} tau_m (x - m)^n / n!
double omega(const TauTable& table, double x);

/// sum_{l=0}^{n} (-1)^{n-l} C(n,l) g(x + l z), compensated.
double difference_op(const std::function<double(double)>& g, double x, double z, int n);

/// Delta_z Omega(x) through z^n I(x) + sum_{x < m <= x+nz} tau_m B_m, which
/// avoids the cancellation of the direct alternating sum.
double difference_of_omega(const TauTable& table, double x, double z);

struct SandwichResult {
  double lower = 0.0;   // z^n I(x)
  double middle = 0.0;  // Delta_z Omega(x)
  double upper = 0.0;   // z^n I(x + nz)
  double omega_lhs = 0.0;  // I(x)
  double omega_rhs = 0.0;  // n!/x^n Omega(2x)
  bool ok = false;
};

SandwichResult sandwich_evaluate(const TauTable& table, double x, double z);
bool sandwich_check(const TauTable& table, double x, double z);

struct IdentityCase {
  int n = 0;
  int alpha = 0;
  std::string value;     // exact decimal
  std::string expected;
  bool ok = false;
  bool fits_int64 = true;
};

struct IdentityReport {
  std::vector<IdentityCase> cases;
  bool pass = false;
};

/// sum (-1)^{n-l} C(n,l) l^alpha for 1 <= n <= max_n, 0 <= alpha <= n+1,
/// against 0, n!, (n/2)(n+1)! in exact arithmetic.
IdentityReport identity_sweep(int max_n = 12);

}  // namespace idealcount
