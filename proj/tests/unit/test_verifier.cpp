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

#include <cmath>
#include <random>

#include "doctest.h"
#include "idealcount/errors.hpp"
#include "idealcount/residue.hpp"
#include "idealcount/verifier.hpp"
#include "oracles.hpp"

using namespace idealcount;

namespace {

const std::string kData = IDEALCOUNT_DATA_DIR;

FieldSpec field(const char* name) { return load_field(kData + "/fields/" + name + ".json"); }

const TableCell& cell(const TableReport& r, int n, const std::string& column) {
  for (const auto& row : r.rows)
    if (row.n == n)
      for (const auto& c : row.cells)
        if (c.column == column) return c;
  FAIL("missing cell " << column << " at n=" << n);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_SUITE("tables") {
  TEST_CASE("all five reproduce") {
    for (TableId id : {TableId::T1, TableId::T2, TableId::T3, TableId::T4, TableId::T5}) {
      CAPTURE(to_string(id));
      const TableReport r = reproduce_table(id);
      CHECK(r.pass);
      CHECK(r.worst_rel_diff <= kTableTolerance);
      CHECK(!r.rows.empty());
      for (const auto& row : r.rows)
        for (const auto& c : row.cells) {
          CHECK(c.ok == (c.rel_diff <= kTableTolerance));
          CHECK(oracle::rel_to_printed(c.computed.ln_abs(), c.printed) <= 1e-5L);
        }
    }
  }

  TEST_CASE("spot values") {
    const TableReport t1 = reproduce_table(TableId::T1);
    CHECK(cell(t1, 10, "lambda_S").printed == "1.90904E+153");
    CHECK(cell(t1, 10, "lambda_S").ok);
    CHECK(cell(t1, 10, "lambda_K").printed == "5.52115E+32");
    CHECK(cell(t1, 10, "lambda_K").ok);
    const TableReport t4 = reproduce_table(TableId::T4);
    CHECK(cell(t4, 9, "v_sum").printed == "8.29120E-05");
    CHECK(cell(t4, 9, "q1").printed == "1.62755E+00");
    CHECK(cell(t4, 9, "v_sum").computed < cell(t4, 9, "q1").computed);
    for (const auto& row : t4.rows) CHECK(row.extra_ok);
    const TableReport t3 = reproduce_table(TableId::T3);
    CHECK(cell(t3, 5, "delta0").computed.to_double() == 1607.0);
    CHECK(cell(t3, 5, "delta0").rel_diff == 0.0);
  }

  TEST_CASE("table ids") {
    CHECK(parse_table_id("t4") == TableId::T4);
    CHECK_THROWS_AS(parse_table_id("T9"), ParseError);
    CHECK_THROWS_AS(parse_table_id(""), ParseError);
  }
}

TEST_SUITE("finite sums") {
  TEST_CASE("omega examples") {
    const TauTable t = tau_sieve(field("gaussian"), 1000);
    CHECK(omega(t, 3) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(omega(t, 0.5) == 0.0);
    CHECK(omega(t, 1) == 0.0);
    CHECK_THROWS_AS(omega(t, 1000.5), RangeError);
  }

  TEST_CASE("property: omega matches the oracle") {
    const TauTable t = tau_sieve(field("cubic23"), 20000);
    auto gen = oracle::rng();
    std::uniform_real_distribution<double> pick(1, 20000);
    for (int i = 0; i < 200; ++i) {
      const double x = pick(gen);
      CHECK(omega(t, x) == doctest::Approx((double)oracle::omega(t.tau_values(), x, 3)).epsilon(1e-11));
    }
  }

  TEST_CASE("difference operator") {
    auto sq = [](double w) { return w * w; };
    auto cube = [](double w) { return w * w * w; };
    auto lin = [](double w) { return w; };
    for (double x : {0.0, 1.5, 37.0})
      for (double z : {0.25, 1.0, 3.0}) {
        CHECK(difference_op(sq, x, z, 2) == doctest::Approx(2 * z * z).epsilon(1e-12));
        CHECK(difference_op(cube, x, z, 2) == doctest::Approx(6 * z * z * x + 6 * z * z * z).epsilon(1e-12));
        CHECK(std::fabs(difference_op(lin, x, z, 2)) <= 1e-12 * (1 + x));
      }
    // degree n kills everything below w^n
    for (int n = 2; n <= 8; ++n)
      for (int a = 0; a < n; ++a) {
        auto g = [a](double w) { return std::pow(w, a); };
        CHECK(std::fabs(difference_op(g, 2.0, 0.5, n)) <= 1e-9 * std::pow(2.0 + 0.5 * n, a) * std::pow(2.0, n));
      }
  }

  TEST_CASE("identity sweep") {
    const IdentityReport r = identity_sweep();
    CHECK(r.pass);
    int seen = 0;
    for (const auto& c : r.cases) {
      CAPTURE(c.n);
      CAPTURE(c.alpha);
      CHECK(c.ok);
      CHECK(c.fits_int64);
      CHECK(c.value == oracle::alternating_power_sum(c.n, c.alpha));
      if (c.n == 2 && c.alpha == 2) CHECK(c.value == "2");
      if (c.n == 2 && c.alpha == 3) CHECK(c.value == "6");
      if (c.n == 12 && c.alpha == 5) CHECK(c.value == "0");
      ++seen;
    }
    CHECK(seen == 102);  // alpha = 0..n+1 for n = 1..12
  }
}

TEST_SUITE("sandwich") {
  TEST_CASE("Q(i) at x = 4, z = 1") {
    const TauTable t = tau_sieve(field("gaussian"), 1000);
    const SandwichResult s = sandwich_evaluate(t, 4, 1);
    CHECK(s.ok);
    CHECK(sandwich_check(t, 4, 1));
    CHECK(s.lower == 3.0);  // I(4)
    CHECK(s.upper == 5.0);  // I(6)
    CHECK(s.middle == doctest::Approx(omega(t, 4) - 2 * omega(t, 5) + omega(t, 6)).epsilon(1e-12));
    CHECK_THROWS_AS(sandwich_check(t, 999, 1), RangeError);
  }

  TEST_CASE("property: 1000 random pairs per field") {
    auto gen = oracle::rng();
    for (const char* name : {"gaussian", "sqrt5", "eisenstein", "sqrt2", "cubic23"}) {
      CAPTURE(name);
      const TauTable t = tau_sieve(field(name), 100000);
      std::uniform_real_distribution<double> px(1, 40000), pz(1e-3, 100);
      for (int i = 0; i < 1000; ++i) {
        const double x = px(gen), z = pz(gen);
        CAPTURE(x);
        CAPTURE(z);
        CHECK(sandwich_check(t, x, z));
        if (i % 100 == 0 && x < 3000) {
          const auto om = [&](double w) { return omega(t, w); };
          const double direct = difference_op(om, x, z, t.field().degree);
          CHECK(difference_of_omega(t, x, z) == doctest::Approx(direct).epsilon(1e-6));
        }
      }
    }
  }

  TEST_CASE("small z recovers I(x)") {
    const TauTable t = tau_sieve(field("gaussian"), 1000);
    for (double x : {4.5, 10.5, 99.5}) {
      const double z = 1e-4;
      CHECK(difference_of_omega(t, x, z) / (z * z) == doctest::Approx((double)ideal_count(t, x)).epsilon(1e-9));
    }
  }
}

TEST_SUITE("bound report") {
  TEST_CASE("Q(i) up to 10^6") {
    const BoundReport r = bound_report(field("gaussian"), 1e6, 50);
    CHECK(r.pass);
    CHECK(r.max_ratio < 1e-9);
    CHECK(r.auxiliary_ok);
    CHECK(r.points.size() == 50);
    CHECK(std::isfinite(r.observed_c));
    CHECK(r.observed_c > 0);
    CHECK(r.kappa.value == doctest::Approx(0.7853981633974483).epsilon(1e-12));
    for (const auto& p : r.points) {
      CHECK(p.beyond_disc);
      CHECK(p.q1_ok);
      CHECK(p.below1.ok);
      CHECK(p.above1.ok);
      CHECK(p.log_case.ok);
      CHECK(!(p.rhs_sunley < p.rhs_improved));
    }
    CHECK(r.points.front().x == 5.0);
    CHECK(r.points.back().x == 1e6);
  }

  TEST_CASE("every bundled field passes") {
    for (const char* name : {"eisenstein", "sqrt5", "sqrt2", "cubic23"}) {
      CAPTURE(name);
      const BoundReport r = bound_report(field(name), 1e6, 50);
      CHECK(r.pass);
      CHECK(r.max_ratio <= 1.0);
    }
  }

  TEST_CASE("degree one degenerates to the floor") {
    const FieldSpec q = parse_field(R"({"label":"Q","degree":1,"r1":1,"r2":0,"disc":1})");
    const BoundReport r = bound_report(q, 1000, 20);
    CHECK(r.pass);
    for (const auto& p : r.points) {
      CHECK(p.error < 1.0);
      CHECK(p.ideal_count == (std::uint64_t)std::floor(p.x));
    }
  }

  TEST_CASE("grid") {
    const auto g = bound_grid(field("sqrt5"), 1e4, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 6.0);
    CHECK(g.back() == 1e4);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] / g[i - 1] == doctest::Approx(g[1] / g[0]).epsilon(1e-12));
    CHECK_THROWS_AS(bound_grid(field("sqrt5"), 1e4, 1), DomainError);
    CHECK_THROWS_AS(bound_grid(field("sqrt5"), 5, 10), DomainError);
    const TauTable t = tau_sieve(field("gaussian"), 1000);
    CHECK_THROWS_AS(bound_report(t, kappa_quadratic(-4), 2000, 10), RangeError);
  }
}
