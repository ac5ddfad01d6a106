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

// One PASS/FAIL line per acceptance criterion. Exit status is the number
// of failed criteria (0 when everything holds).

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "idealcount/analytic_bounds.hpp"
#include "idealcount/constants.hpp"
#include "idealcount/field.hpp"
#include "idealcount/ideal_counter.hpp"
#include "idealcount/kronecker.hpp"
#include "idealcount/log_magnitude.hpp"
#include "idealcount/quadrature.hpp"
#include "idealcount/residue.hpp"
#include "idealcount/special_functions.hpp"
#include "idealcount/verifier.hpp"

using namespace idealcount;

namespace {

constexpr double kRel = 1e-5;
constexpr double kPi = std::numbers::pi;
const std::string kFields = std::string(IDEALCOUNT_DATA_DIR) + "/fields/";

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    if (o.pass) o.detail = "first failure: " + what;
    o.pass = false;
  }
}

double rel_to(const LogMagnitude& v, const char* printed) { return relative_difference(v, parse_scientific(printed)); }

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Checks every cell of a table plus the listed (n, column, printed) examples.
struct Example {
  int n;
  const char* column;
  const char* printed;
};

Outcome table_criterion(TableId id, const std::vector<int>& degrees, const std::vector<std::string>& columns,
                        const std::vector<Example>& examples, std::size_t expected_cells) {
  Outcome o;
  const TableReport r = reproduce_table(id);
  std::size_t cells = 0;
  for (const auto& row : r.rows) {
    if (std::find(degrees.begin(), degrees.end(), row.n) == degrees.end()) continue;
    for (const auto& c : row.cells) {
      if (std::find(columns.begin(), columns.end(), c.column) == columns.end()) continue;
      ++cells;
      require(o, c.rel_diff <= kRel, c.column + " at n=" + std::to_string(row.n));
    }
  }
  require(o, cells == expected_cells, "cell count " + std::to_string(cells));
  for (const auto& e : examples) {
    bool found = false;
    for (const auto& row : r.rows)
      for (const auto& c : row.cells)
        if (row.n == e.n && c.column == e.column) {
          found = true;
          require(o, c.printed == e.printed && rel_to(c.computed, e.printed) <= kRel,
                  std::string(e.column) + " example at n=" + std::to_string(e.n));
        }
    require(o, found, std::string("example cell ") + e.column);
  }
  require(o, r.pass, "table report");
  if (o.pass) o.detail = std::to_string(cells) + " cells, worst rel diff " + fmt("%.2e", r.worst_rel_diff);
  return o;
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  Outcome o = table_criterion(TableId::T1, {2, 3, 4, 5, 10, 15}, {"lambda_S", "lambda_K"},
                              {{2, "lambda_K", "8.80778E+11"}}, 12);
  require(o, rel_to(lambda_K(2), "8.80778E+11") <= kRel, "lambda_K(2) direct");
  const double dt = seconds_since(t0);
  require(o, dt < 1.0, "runtime " + fmt("%.3f s", dt));
  if (o.pass) o.detail += ", " + fmt("%.3f s", dt);
  return o;
}

Outcome criterion2() {
  Outcome o = table_criterion(TableId::T2, {2, 3, 4, 5, 10, 25, 50, 75}, {"q1", "a7"},
                              {{25, "q1", "9.52034E-01"}, {4, "a7", "3.93216E+09"}}, 16);
  require(o, rel_to(q1_log(25), "9.52034E-01") <= kRel, "Q1(25) direct");
  require(o, rel_to(a7(4), "3.93216E+09") <= kRel, "a7(4) direct");
  return o;
}

Outcome criterion3() {
  const TableReport r = reproduce_table(TableId::T4);
  std::vector<int> degrees;
  for (const auto& row : r.rows) degrees.push_back(row.n);
  Outcome o = table_criterion(TableId::T4, degrees, {"v1", "v2", "v3", "v_sum"},
                              {{7, "v1", "2.47647E-05"}, {10, "v_sum", "1.72487E-05"}}, 48);
  require(o, r.rows.size() == 12, "row count " + std::to_string(r.rows.size()));
  for (const auto& row : r.rows) require(o, row.extra_ok, "v-sum <= Q1 at n=" + std::to_string(row.n));
  return o;
}

Outcome criterion4() {
  const TableReport r = reproduce_table(TableId::T5);
  std::vector<int> degrees;
  for (const auto& row : r.rows) degrees.push_back(row.n);
  Outcome o = table_criterion(TableId::T5, degrees, {"q2", "q3", "a12", "a13"},
                              {{30, "q2", "1.33010E+45"}, {50, "q3", "2.53056E+138"}}, 32);
  require(o, r.rows.size() == 8, "row count");
  return o;
}

Outcome criterion5() {
  const auto t0 = Clock::now();
  Outcome o;
  const QuadratureResult top = upsilon_integral(0.45);
  require(o, top.value <= kUpsilonIntegralBound, "value " + fmt("%.10f", top.value));
  require(o, top.est_error <= 1e-6, "est_error " + fmt("%.2e", top.est_error));
  int argmax = 0;
  double best = -1;
  for (int k = 10; k <= 450; ++k) {
    const double v = upsilon_integral(k / 1000.0).value;
    if (v > best) {
      best = v;
      argmax = k;
    }
  }
  require(o, argmax == 450, "grid maximum at eta = " + fmt("%.3f", argmax / 1000.0));
  const double dt = seconds_since(t0);
  require(o, dt < 30.0, "runtime " + fmt("%.2f s", dt));
  if (o.pass)
    o.detail = "value " + fmt("%.10f", top.value) + ", est_error " + fmt("%.1e", top.est_error) +
               ", argmax 0.450, " + fmt("%.2f s", dt);
  return o;
}

Outcome criterion6() {
  Outcome o;
  double worst = 0, slowest = 0;
  for (const char* name : {"gaussian", "eisenstein", "sqrt5", "sqrt2"}) {
    const auto t0 = Clock::now();
    const FieldSpec f = load_field(kFields + name + ".json");
    const TauTable table = tau_sieve(f, 1'000'000);
    const Residue kappa = kappa_quadratic(*f.fundamental_disc);
    const BoundReport r = bound_report(table, kappa, 1e6, 50);
    const double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    require(o, r.points.size() == 50, std::string(name) + " grid size");
    const double d = std::fabs(static_cast<double>(f.disc));
    const LogMagnitude lk = lambda_K(2);
    for (const auto& p : r.points) {
      // Lambda_K(2) |disc|^{1/3} log|disc| x^{1/3}
      const LogMagnitude rhs = lk * LogMagnitude::from_log(std::log(d) / 3 + std::log(p.x) / 3) *
                               LogMagnitude::from_double(std::log(d));
      const double err = std::fabs(static_cast<double>(ideal_count(table, p.x)) - kappa.value * p.x);
      require(o, !(rhs < LogMagnitude::from_double(err)), std::string(name) + " at x=" + fmt("%.6g", p.x));
    }
    require(o, r.max_ratio <= 1.0, std::string(name) + " max_ratio");
    require(o, dt < 10.0, std::string(name) + " runtime " + fmt("%.2f s", dt));
    worst = std::max(worst, r.max_ratio);
  }
  if (o.pass) o.detail = "4 fields x 50 points, max_ratio " + fmt("%.2e", worst) + ", slowest " + fmt("%.2f s", slowest);
  return o;
}

Outcome criterion7() {
  Outcome o;
  long long equalities = 0;
  for (std::int64_t D : {-3, -4, -7, -8, -11}) {
    const FieldSpec f = parse_field(R"({"label":"q","degree":2,"r1":0,"r2":1,"disc":)" + std::to_string(D) +
                                    R"(,"fundamental_disc":)" + std::to_string(D) + "}");
    const TauTable t = tau_sieve(f, 10000);
    for (std::int64_t m = 1; m <= 10000; ++m) {
      const auto tau = t.tau(static_cast<std::uint64_t>(m));
      require(o, tau == lattice_oracle(D, static_cast<std::uint64_t>(m)),
              "lattice D=" + std::to_string(D) + " m=" + std::to_string(m));
      long long divisor_sum = 0;
      for (std::int64_t d = 1; d * d <= m; ++d)
        if (m % d == 0) {
          divisor_sum += kronecker(D, d);
          if (d * d != m) divisor_sum += kronecker(D, m / d);
        }
      require(o, static_cast<long long>(tau) == divisor_sum,
              "divisor sum D=" + std::to_string(D) + " m=" + std::to_string(m));
      equalities += 2;
    }
  }
  if (o.pass) o.detail = std::to_string(equalities) + " exact equalities";
  return o;
}

Outcome criterion8() {
  Outcome o;
  struct Case {
    std::int64_t D;
    double exact;
    const char* file;
  };
  const Case cases[] = {{-4, kPi / 4, "gaussian"},
                        {-3, kPi / (3 * std::sqrt(3.0)), "eisenstein"},
                        {5, 2 * std::log((1 + std::sqrt(5.0)) / 2) / std::sqrt(5.0), "sqrt5"}};
  double worst = 0;
  for (const auto& c : cases) {
    const Residue r = kappa_quadratic(c.D);
    const double rel = std::fabs(r.value - c.exact) / c.exact;
    worst = std::max(worst, rel);
    require(o, rel <= 1e-12, "closed form D=" + std::to_string(c.D));
    require(o, r.value <= kappa_upper(2, std::log(std::fabs(static_cast<double>(c.D)))),
            "Louboutin D=" + std::to_string(c.D));
    const Residue e = kappa_empirical(tau_sieve(load_field(kFields + c.file + ".json"), 1'000'000));
    require(o, std::fabs(e.value - r.value) <= e.est_error, "empirical D=" + std::to_string(c.D));
  }
  if (o.pass) o.detail = "worst closed-form rel diff " + fmt("%.1e", worst);
  return o;
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  std::vector<double> g;
  const int steps = static_cast<int>(std::ceil((std::log10(hi) - std::log10(lo)) * per_decade));
  for (int i = 0; i <= steps; ++i) g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / steps));
  return g;
}

Outcome criterion9() {
  Outcome o;
  long long checks = 0;
  const auto tg = log_grid(1e-3, 50, 200);
  const auto ug = log_grid(1, 1e6, 200);
  for (int n = 2; n <= 10; ++n) {
    for (int r2 = 0; 2 * r2 <= n; ++r2) {
      const int r1 = n - 2 * r2;
      for (double sigma : {mu_K(n), nu_K(n)})
        for (double t : tg) {
          const auto a = alpha_exact(r1, r2, sigma, t);
          require(o, std::abs(1.0 + a) <= std::pow(2.0, 0.5 * n) * (1 + 1e-14), "alpha bullet 1");
          if (t > 1)
            require(o, std::abs(a) <= 2.1 * std::pow(2.0, n) * (std::exp(-kPi * t) + std::exp(-2 * kPi * t)),
                    "alpha bullet 2");
          checks += 2;
        }
    }
    for (double u : ug) {
      require(o, std::abs(upsilon_product_exact(n, mu_K(n), u, UpsilonVariant::full)) * u <= xi4(n), "Upsilon");
      require(o, std::abs(upsilon_product_exact(n, nu_K(n), u, UpsilonVariant::single)) * u <= xi1(n) * (1 + 1e-15),
              "Upsilon_1");
      checks += 2;
    }
  }
  require(o, beta_g(2) < kXi2Constant, "g(2)");
  for (int n = 2; n <= 100; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    require(o, component_bounds(n, 3.0 * n, Side::I).dominance_ok, "dominance I" + at);
    require(o, component_bounds(n, 3.0 * n, Side::J).dominance_ok, "dominance J" + at);
    const SplitMinimums m = split_point_minimums(n);
    require(o, m.S_I <= 3 * n && m.S_J <= 3 * n, "split minimums" + at);
    require(o, beta_bound(n, mu_K(n), m.S_I) < 1.0, "beta below one" + at);
    const ConstantRow& row = constant_row(n);
    const LogMagnitude mid = row.q6 * LogMagnitude::from_log(1.0 / n);
    require(o, !(mid < row.q8_upper) && !(row.lambda_K < mid), "Q8 chain" + at);
    checks += 6;
  }
  double id_err = 0;
  for (int i = 0; i <= 600; ++i) {
    const double z = i / 100.0;
    id_err = std::max(id_err, std::fabs(incomplete_gamma_half(z * z) - std::sqrt(kPi) * idealcount::erfc(z)));
  }
  require(o, id_err <= 1e-12, "erfc identity " + fmt("%.1e", id_err));
  std::vector<double> mus;
  for (int m = -5; m <= 5; ++m) mus.push_back(m);
  double probe_max = 0;
  for (const auto& row : satz204_sweep({1, 10, 100, 1000}, mus)) {
    probe_max = std::max(probe_max, row.result.value);
    require(o, row.below_bound && row.result.value < kSatz204Bound, "probe");
  }
  if (o.pass)
    o.detail = std::to_string(checks) + " grid checks, identity err " + fmt("%.1e", id_err) + ", probe max " +
               fmt("%.3f", probe_max);
  return o;
}

Outcome criterion10() {
  Outcome o;
  const IdentityReport ids = identity_sweep(12);
  require(o, ids.pass, "identity sweep");
  for (const auto& c : ids.cases) require(o, c.ok && c.fits_int64, "identity case");
  // small dyadic x and z keep every g(x + l z) and every product exact in binary64
  for (double x : {0.0, 0.5, 3.25, 17.0, 40.5})
    for (double z : {0.25, 1.0, 2.5})
      for (int n = 2; n <= 6; ++n) {
        auto pw = [](int a) { return std::function<double(double)>([a](double w) { return std::pow(w, a); }); };
        const double fact = std::tgamma(n + 1.0), fact1 = std::tgamma(n + 2.0);
        const std::string at = " n=" + std::to_string(n);
        require(o, difference_op(pw(n), x, z, n) == fact * std::pow(z, n), "Delta w^n" + at);
        require(o, difference_op(pw(n + 1), x, z, n) == fact1 * std::pow(z, n) * x + 0.5 * n * fact1 * std::pow(z, n + 1),
                "Delta w^(n+1)" + at);
        for (int a = 0; a < n; ++a) require(o, difference_op(pw(a), x, z, n) == 0.0, "Delta lower power" + at);
      }
  std::mt19937_64 gen(0x1dea1c0u);
  int sandwiches = 0;
  for (const char* name : {"gaussian", "eisenstein", "sqrt5", "sqrt2", "cubic23"}) {
    const TauTable t = tau_sieve(load_field(kFields + name + ".json"), 100000);
    std::uniform_real_distribution<double> px(1, 40000), pz(1e-3, 100);
    for (int i = 0; i < 1000; ++i) {
      const double x = px(gen), z = pz(gen);
      require(o, sandwich_check(t, x, z), std::string("sandwich ") + name);
      ++sandwiches;
    }
  }
  if (o.pass)
    o.detail = std::to_string(ids.cases.size()) + " identities, " + std::to_string(sandwiches) + " sandwiches";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"T1 reproduction", criterion1},   {"T2 reproduction", criterion2},
      {"T4 reproduction", criterion3},   {"T5 reproduction", criterion4},
      {"integral certificate", criterion5},   {"main-theorem empirical check", criterion6},
      {"oracle equivalence", criterion7},     {"residue exactness", criterion8},
      {"contour-bound property suite", criterion9}, {"finite-difference structural suite", criterion10},
  };
  int failed = 0, k = 0;
  for (const auto& [title, check] : criteria) {
    ++k;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", k, title, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed;
}
