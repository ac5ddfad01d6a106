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

#include "idealcount/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "compensated.hpp"
#include "idealcount/constants.hpp"
#include "idealcount/errors.hpp"
#include "idealcount/special_functions.hpp"

namespace idealcount {
namespace {

using detail::CompensatedSum;

TableCell make_cell(const std::string& column, const LogMagnitude& computed, const std::string& printed) {
  TableCell c;
  c.column = column;
  c.computed = computed;
  c.printed = printed;
  c.rel_diff = relative_difference(computed, parse_scientific(printed));
  c.ok = c.rel_diff <= kTableTolerance;
  return c;
}

std::vector<LogMagnitude> compute_row(TableId id, const GoldenRow& row) {
  const int n = row.n;
  switch (id) {
    case TableId::T1: return {lambda_sunley(n), lambda_K(n)};
    case TableId::T2: return {q1_log(n), a7(n)};
    case TableId::T3: return {LogMagnitude::from_double(static_cast<double>(delta0(n)))};
    case TableId::T4: {
      const double floor = row.disc_floor ? static_cast<double>(row.disc_floor)
                                          : static_cast<double>(delta0(std::min(n, 7)));
      const double a = v1_at_disc(0.45, floor, n);
      const double b = v2(n);
      const double c = v3_at_disc(n, floor);
      return {LogMagnitude::from_double(a), LogMagnitude::from_double(b), LogMagnitude::from_double(c),
              LogMagnitude::from_double(a + b + c), q1_log(n)};
    }
    case TableId::T5: return {a12(n), a13(n), q2(n), q3(n)};
  }
  return {};
}

}  // namespace

TableReport reproduce_table(TableId id) {
  const GoldenTable& g = golden_table(id);
  TableReport report;
  report.id = id;
  report.columns = g.columns;
  bool all_ok = true;
  for (const GoldenRow& gr : g.rows) {
    TableRow row;
    row.n = gr.n;
    row.note = gr.note;
    const std::vector<LogMagnitude> computed = compute_row(id, gr);
    for (std::size_t i = 0; i < computed.size(); ++i) {
      if (id == TableId::T3) {
        TableCell c;
        c.column = g.columns[i];
        c.computed = computed[i];
        c.printed = gr.printed[i];
        c.ok = std::to_string(delta0(gr.n)) == gr.printed[i];
        c.rel_diff = c.ok ? 0.0 : 1.0;
        row.cells.push_back(c);
      } else {
        row.cells.push_back(make_cell(g.columns[i], computed[i], gr.printed[i]));
      }
      report.worst_rel_diff = std::max(report.worst_rel_diff, row.cells.back().rel_diff);
      all_ok = all_ok && row.cells.back().ok;
    }
    if (id == TableId::T4) {
      // Dominance with the row's own floor and with delta0(min(n, 7)).
      const int N0 = std::min(gr.n, 7);
      const double q1v = q1(gr.n);
      const double with_floor = computed[3].to_double();
      const double with_delta0 = v1(0.45, N0, gr.n) + v2(gr.n) + v3(gr.n, N0);
      row.extra_ok = with_floor <= q1v && with_delta0 <= q1v;
      all_ok = all_ok && row.extra_ok;
    }
    report.rows.push_back(std::move(row));
  }
  report.pass = all_ok;
  return report;
}

std::vector<double> bound_grid(const FieldSpec& field, double x_max, int points) {
  if (points < 2) throw DomainError("bound_grid: need at least two points");
  const double start = std::max(2.0, std::fabs(static_cast<double>(field.disc)) + 1.0);
  if (!(x_max > start)) throw DomainError("bound_grid: x_max must exceed max(2, |disc| + 1)");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double ratio = std::log(x_max / start) / (points - 1);
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = start * std::exp(ratio * i);
  grid.front() = start;
  grid.back() = x_max;
  return grid;
}

BoundReport bound_report(const TauTable& table, const Residue& kappa, double x_max, int points) {
  const FieldSpec& field = table.field();
  if (x_max > static_cast<double>(table.X())) throw RangeError("bound_report: x_max exceeds the table limit");
  BoundReport report;
  report.label = field.label;
  report.degree = field.degree;
  report.kappa = kappa;
  const std::vector<double> grid = bound_grid(field, x_max, points);
  const int n = field.degree;
  const double abs_disc = std::fabs(static_cast<double>(field.disc));

  // Running partial sums at theta1 = 1/2 + 1/(2n), theta = 1 and theta2 = 3/2 + 1/(2n).
  const double theta1 = 0.5 + 0.5 / n;
  const double theta2 = 1.5 + 0.5 / n;
  const std::uint64_t X = table.X();
  std::vector<double> s1(grid.size()), slog(grid.size()), s2_head(grid.size());
  CompensatedSum a1, alog, a2;
  std::size_t gi = 0;
  for (std::uint64_t m = 1; m <= X; ++m) {
    while (gi < grid.size() && static_cast<double>(m) > grid[gi]) {
      s1[gi] = a1.value();
      slog[gi] = alog.value();
      s2_head[gi] = a2.value();
      ++gi;
    }
    const double t = table.tau(m);
    if (t == 0.0) continue;
    const double md = static_cast<double>(m);
    a1.add(t * std::pow(md, -theta1));
    alog.add(t / md);
    a2.add(t * std::pow(md, -theta2));
  }
  for (; gi < grid.size(); ++gi) {
    s1[gi] = a1.value();
    slog[gi] = alog.value();
    s2_head[gi] = a2.value();
  }
  const double s2_total = a2.value();
  // Beyond the table: sum_{m > X} tau_m m^{-theta} <= theta int_X^inf I(t) t^{-theta-1} dt,
  // estimated with I(t) <= 2 kappa t.
  const double s2_remainder = 2.0 * theta2 * kappa.value * std::pow(static_cast<double>(X), 1.0 - theta2) / (theta2 - 1.0);

  for (std::size_t i = 0; i < grid.size(); ++i) {
    BoundPoint p;
    p.x = grid[i];
    p.ideal_count = ideal_count(table, p.x);
    p.kappa_x = kappa.value * p.x;
    p.error = std::fabs(static_cast<double>(p.ideal_count) - p.kappa_x);
    if (n == 1) {
      p.rhs_improved = LogMagnitude::one();
      p.rhs_sunley = LogMagnitude::one();
      p.ratio = p.error;
    } else {
      p.rhs_improved = thm_bound(field, p.x, BoundKind::improved);
      p.rhs_sunley = thm_bound(field, p.x, BoundKind::sunley);
      p.ratio = (LogMagnitude::from_double(p.error) / p.rhs_improved).to_double();
      p.beyond_disc = p.x > abs_disc;
      if (p.beyond_disc) {
        p.q1_rhs = q1(n) * std::pow(std::log(abs_disc), n - 1) * p.x;
        p.q1_ok = static_cast<double>(p.ideal_count) <= p.q1_rhs;
        p.below1 = {theta1, s1[i], partial_sum_bound(field, theta1, p.x, PartialSumKind::below1), false};
        p.below1.ok = p.below1.lhs <= p.below1.rhs;
        p.above1 = {theta2, s2_total - s2_head[i] + s2_remainder,
                    partial_sum_bound(field, theta2, p.x, PartialSumKind::above1), false};
        p.above1.ok = p.above1.lhs <= p.above1.rhs;
        p.log_case = {1.0, slog[i], partial_sum_bound(field, 1.0, p.x, PartialSumKind::log), false};
        p.log_case.ok = p.log_case.lhs <= p.log_case.rhs;
        report.auxiliary_ok = report.auxiliary_ok && p.q1_ok && p.below1.ok && p.above1.ok && p.log_case.ok;
      }
    }
    report.max_ratio = std::max(report.max_ratio, p.ratio);
    const double scale = n == 1 ? 1.0 : std::pow(p.x, 1.0 - 2.0 / (n + 1.0));
    report.observed_c = std::max(report.observed_c, p.error / scale);
    report.points.push_back(p);
  }
  report.pass = report.max_ratio <= 1.0 && report.auxiliary_ok;
  return report;
}

BoundReport bound_report(const FieldSpec& field, double x_max, int points) {
  if (!(x_max >= 1.0)) throw DomainError("bound_report: x_max must be at least 1");
  const auto X = static_cast<std::uint64_t>(std::ceil(x_max));
  const TauTable table = tau_sieve(field, X);
  return bound_report(table, kappa_for(table), x_max, points);
}

double omega(const TauTable& table, double x) {
  if (x > static_cast<double>(table.X())) throw RangeError("omega: x exceeds the table limit");
  if (x < 1.0) return 0.0;
  const int n = table.field().degree;
  const double inv_fact = std::exp(-log_factorial(n));
  CompensatedSum sum;
  const auto top = static_cast<std::uint64_t>(std::floor(x));
  for (std::uint64_t m = 1; m <= top; ++m) {
    const std::uint32_t t = table.tau(m);
    if (t == 0) continue;
    sum.add(t * std::pow(x - static_cast<double>(m), n) * inv_fact);
  }
  return sum.value();
}

double difference_op(const std::function<double(double)>& g, double x, double z, int n) {
  if (n < 0) throw DomainError("difference_op: n must be non-negative");
  CompensatedSum sum;
  for (int l = 0; l <= n; ++l) {
    const double c = ((n - l) % 2 == 0 ? 1.0 : -1.0) * binomial(n, l);
    const double v = g(x + l * z);
    // keep the rounding error of c * v as a second addend
    const double prod = c * v;
    sum.add(prod);
    sum.add(std::fma(c, v, -prod));
  }
  return sum.value();
}

double difference_of_omega(const TauTable& table, double x, double z) {
  const int n = table.field().degree;
  if (!(z > 0.0)) throw DomainError("difference_of_omega: z must be positive");
  if (!(x >= 0.0)) throw DomainError("difference_of_omega: x must be non-negative");
  const double top = x + n * z;
  if (top > static_cast<double>(table.X())) throw RangeError("difference_of_omega: x + n z exceeds the table limit");
  const double inv_fact = std::exp(-log_factorial(n));
  CompensatedSum sum;
  sum.add(std::pow(z, n) * static_cast<double>(ideal_count(table, x)));
  const auto first = static_cast<std::uint64_t>(std::floor(x)) + 1;
  const auto last = static_cast<std::uint64_t>(std::floor(top));
  for (std::uint64_t m = std::max<std::uint64_t>(first, 1); m <= last; ++m) {
    const std::uint32_t t = table.tau(m);
    if (t == 0) continue;
    CompensatedSum b;
    for (int l = 0; l <= n; ++l) {
      const double d = x + l * z - static_cast<double>(m);
      if (d <= 0.0) continue;
      const double sign = ((n - l) % 2 == 0) ? 1.0 : -1.0;
      b.add(sign * binomial(n, l) * std::pow(d, n) * inv_fact);
    }
    sum.add(t * b.value());
  }
  return sum.value();
}

SandwichResult sandwich_evaluate(const TauTable& table, double x, double z) {
  const int n = table.field().degree;
  if (2.0 * x > static_cast<double>(table.X())) throw RangeError("sandwich_check: 2x exceeds the table limit");
  SandwichResult r;
  const double zn = std::pow(z, n);
  r.lower = zn * static_cast<double>(ideal_count(table, x));
  r.middle = difference_of_omega(table, x, z);
  r.upper = zn * static_cast<double>(ideal_count(table, x + n * z));
  r.omega_lhs = static_cast<double>(ideal_count(table, x));
  r.omega_rhs = x > 0.0 ? std::exp(log_factorial(n) - n * std::log(x)) * omega(table, 2.0 * x)
                        : std::numeric_limits<double>::infinity();
  auto leq = [](double a, double b) {
    const double slack = 1e-9 * std::max(std::fabs(a), std::fabs(b));
    return a <= b + slack;
  };
  r.ok = leq(r.lower, r.middle) && leq(r.middle, r.upper) && leq(r.omega_lhs, r.omega_rhs);
  return r;
}

bool sandwich_check(const TauTable& table, double x, double z) { return sandwich_evaluate(table, x, z).ok; }

IdentityReport identity_sweep(int max_n) {
  using boost::multiprecision::cpp_int;
  IdentityReport report;
  report.pass = true;
  const cpp_int int64_max(std::numeric_limits<std::int64_t>::max());
  for (int n = 1; n <= max_n; ++n) {
    cpp_int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    for (int alpha = 0; alpha <= n + 1; ++alpha) {
      cpp_int total = 0;
      cpp_int binom = 1;  // C(n, l)
      bool fits = true;
      for (int l = 0; l <= n; ++l) {
        if (l > 0) binom = binom * (n - l + 1) / l;
        cpp_int power = 1;
        for (int k = 0; k < alpha; ++k) power *= l;
        const cpp_int term = binom * power;
        if (term > int64_max) fits = false;
        if ((n - l) % 2 == 0)
          total += term;
        else
          total -= term;
      }
      cpp_int expected = 0;
      if (alpha == n) expected = fact;
      if (alpha == n + 1) expected = fact * (n + 1) * n / 2;
      IdentityCase c;
      c.n = n;
      c.alpha = alpha;
      c.value = total.str();
      c.expected = expected.str();
      c.fits_int64 = fits && boost::multiprecision::abs(total) <= int64_max;
      c.ok = total == expected;
      report.pass = report.pass && c.ok;
      report.cases.push_back(c);
    }
  }
  return report;
}

}  // namespace idealcount
