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

#include <cfloat>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "idealcount/constants.hpp"
#include "idealcount/log_magnitude.hpp"
#include "idealcount/quadrature.hpp"
#include "idealcount/report_io.hpp"
#include "idealcount/special_functions.hpp"
#include "oracles.hpp"

using namespace idealcount;

namespace {

double ulp_distance(double a, double b) { return std::fabs(a - b) / (std::nextafter(std::fabs(b), DBL_MAX) - std::fabs(b)); }

}  // namespace

TEST_SUITE("log_magnitude") {
  TEST_CASE("exponent addition under multiplication") {
    const auto p = LogMagnitude::from_double(1e30) * LogMagnitude::from_double(1e40);
    CHECK(p.to_double() == doctest::Approx(1e70).epsilon(1e-14));
    CHECK(p.to_scientific(6) == "1.00000E+70");
  }

  TEST_CASE("x times its reciprocal is one for a huge constant") {
    const LogMagnitude x = lambda_sunley(15);
    const LogMagnitude one = x * (LogMagnitude::one() / x);
    CHECK(one.sign() == 1);
    CHECK(std::fabs(one.ln_abs()) < 1e-12);
  }

  TEST_CASE("e^61.4 3^7.5 renders as the printed lambda_S(2)") {
    const LogMagnitude v = LogMagnitude::from_log(61.4) * LogMagnitude::from_double(3.0).pow(7.5);
    CHECK(v.to_scientific(6) == "1.75425E+30");
  }

  TEST_CASE("zero, sign and division errors") {
    CHECK(LogMagnitude::zero().is_zero());
    CHECK(LogMagnitude::from_double(0.0).is_zero());
    CHECK(LogMagnitude::from_double(-2.0).sign() == -1);
    CHECK_THROWS_AS(LogMagnitude::one() / LogMagnitude::zero(), DivideByZero);
    CHECK_THROWS_AS(logmag_arith(LogMagnitude::one(), LogMagnitude::zero(), LogOp::div), DivideByZero);
    CHECK_THROWS_AS(LogMagnitude::from_double(-2.0).pow(0.5), DomainError);
    CHECK(LogMagnitude::from_double(-2.0).pow(3).to_double() == doctest::Approx(-8.0));
  }

  TEST_CASE("cancelling addition is flagged") {
    const auto a = LogMagnitude::from_double(1e10);
    const auto b = LogMagnitude::from_double(-(1e10 - 1.0));
    CHECK(cancellation_digits(a, b) > 6.0);
    CHECK_THROWS_AS(add_checked(a, b), CancellationWarning);
    CHECK_THROWS_AS(logmag_arith(a, b, LogOp::add), CancellationWarning);
    CHECK(add_checked(a, LogMagnitude::from_double(-1.0)).to_double() == doctest::Approx(1e10 - 1.0));
  }

  TEST_CASE("parse_scientific reads values past binary64") {
    const LogMagnitude v = parse_scientific("1.10367E+234");
    CHECK(v.to_scientific(6) == "1.10367E+234");
    const LogMagnitude big = parse_scientific("7.28016E+19757");
    CHECK(big.log10_abs() == doctest::Approx(19757.0 + std::log10(7.28016)).epsilon(1e-14));
    CHECK(big.to_scientific(6) == "7.28016E+19757");
    CHECK_THROWS_AS(parse_scientific("12x"), ParseError);
  }

  TEST_CASE("six-digit rendering rounds half to even") {
    // 2^-10 = 9.765625E-04 is an exact binary tie at six digits.
    CHECK(csv_number(std::ldexp(1.0, -10)) == "9.76562E-04");
    CHECK(csv_number(79.0 / 64.0) == "1.23438E+00");  // 1.234375, odd neighbour
    CHECK(csv_number(0.0) == "0.00000E+00");
    CHECK(csv_number(-2.5) == "-2.50000E+00");
    CHECK(LogMagnitude::from_double(2.5).to_scientific(1) == "2E+00");
    CHECK(LogMagnitude::from_double(3.5).to_scientific(1) == "4E+00");
  }

  TEST_CASE("property: round trip within 4 ulp") {
    auto gen = oracle::rng();
    std::uniform_real_distribution<double> mant(1.0, 10.0);
    std::uniform_int_distribution<int> expo(-300, 300);
    for (int i = 0; i < 20000; ++i) {
      const double r = mant(gen) * std::pow(10.0, expo(gen));
      if (!std::isnormal(r)) continue;
      REQUIRE(ulp_distance(LogMagnitude::from_double(r).to_double(), r) <= 4.0);
    }
  }

  TEST_CASE("property: multiplication adds logs exactly") {
    auto gen = oracle::rng();
    std::uniform_real_distribution<double> ln(-5000.0, 5000.0);
    for (int i = 0; i < 10000; ++i) {
      const double a = ln(gen), b = ln(gen);
      const LogMagnitude p = LogMagnitude::from_log(a) * LogMagnitude::from_log(b);
      REQUIRE(p.ln_abs() == a + b);
      const LogMagnitude q = LogMagnitude::from_log(a) / LogMagnitude::from_log(b);
      REQUIRE(q.ln_abs() == a - b);
    }
  }

  TEST_CASE("property: log-sum-exp addition matches direct addition") {
    auto gen = oracle::rng();
    std::uniform_real_distribution<double> mant(1.0, 10.0);
    std::uniform_int_distribution<int> expo(-150, 150);
    for (int i = 0; i < 20000; ++i) {
      const double a = mant(gen) * std::pow(10.0, expo(gen));
      const double b = mant(gen) * std::pow(10.0, expo(gen));
      const double s = (LogMagnitude::from_double(a) + LogMagnitude::from_double(b)).to_double();
      REQUIRE(std::fabs(s - (a + b)) <= 1e-12 * (a + b));
    }
  }

  TEST_CASE("property: pow_by_real stays within 8 ulp in log space") {
    auto gen = oracle::rng();
    std::uniform_real_distribution<double> ln(-700.0, 700.0), p(-20.0, 20.0);
    for (int i = 0; i < 5000; ++i) {
      const double a = ln(gen), e = p(gen);
      const double got = LogMagnitude::from_log(a).pow(e).ln_abs();
      const double want = a * e;
      REQUIRE(std::fabs(got - want) <= 8.0 * std::fabs(want) * DBL_EPSILON + DBL_MIN);
    }
  }
}

TEST_SUITE("special_functions") {
  TEST_CASE("erfc reference points") {
    CHECK(idealcount::erfc(0.0) == 1.0);
    CHECK(std::fabs(idealcount::erfc(2.0) - static_cast<double>(oracle::erfc(2.0L))) <= 1e-14);
    CHECK(idealcount::erfc(2.0) == doctest::Approx(4.67773e-3).epsilon(1e-5));
    CHECK(idealcount::erfc(40.0) <= 1e-300);
  }

  TEST_CASE("property: erfc absolute error and monotonicity on [0, 30]") {
    double prev = 2.0;
    for (int i = 0; i <= 3000; ++i) {
      const double x = i / 100.0;
      const double v = idealcount::erfc(x);
      REQUIRE(std::fabs(v - static_cast<double>(oracle::erfc(x))) <= 1e-14);
      REQUIRE(v <= prev);
      if (x <= 26.0) REQUIRE((v > 0.0 && v <= 1.0));
      prev = v;
    }
  }

  TEST_CASE("incomplete gamma at one half") {
    CHECK(incomplete_gamma_half(0.0) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
    CHECK(std::fabs(incomplete_gamma_half(4.0) - std::sqrt(std::numbers::pi) * static_cast<double>(oracle::erfc(2.0L))) <=
          1e-14);
    CHECK(std::fabs(incomplete_gamma_half(1.0) - static_cast<double>(oracle::incomplete_gamma_half(1.0L))) <= 1e-14);
    CHECK(incomplete_gamma_half(1.0) == doctest::Approx(0.27880558).epsilon(1e-8));
  }

  TEST_CASE("property: Gamma(1/2, z^2) = sqrt(pi) erfc(z) on [0, 6]") {
    for (int i = 0; i <= 600; ++i) {
      const double z = i / 100.0;
      REQUIRE(std::fabs(incomplete_gamma_half(z * z) - std::sqrt(std::numbers::pi) * idealcount::erfc(z)) <= 1e-12);
      REQUIRE(std::fabs(incomplete_gamma_half(z * z) - static_cast<double>(oracle::incomplete_gamma_half(z * z))) <=
              1e-12);
    }
  }

  TEST_CASE("zeta(1.45) against two references") {
    CHECK(std::fabs(zeta_1_45() - static_cast<double>(oracle::kZeta145)) <= 1e-12);
    CHECK(std::fabs(zeta_1_45() - static_cast<double>(oracle::zeta_partial_tail(1.45L, 1'000'000))) <= 1e-12);
    for (double s : {1.01, 1.1, 1.3, 2.0, 3.5}) {
      CAPTURE(s);
      CHECK(riemann_zeta(s) == doctest::Approx(static_cast<double>(oracle::zeta_partial_tail(s, 200'000))).epsilon(1e-12));
    }
    CHECK(riemann_zeta(2.0) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-14));
  }

  TEST_CASE("factorials and binomials") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(std::exp(log_factorial(10)) == doctest::Approx(3628800.0).epsilon(1e-13));
    CHECK(binomial(12, 6) == 924.0);
    CHECK(binomial(5, 7) == 0.0);
  }
}

TEST_SUITE("quadrature") {
  TEST_CASE("exponential decay integrates to one") {
    const auto r = integrate_semi_infinite([](double t) { return std::exp(-t); }, 1e-12);
    CHECK(std::fabs(r.value - 1.0) <= 1e-12);
    CHECK(r.est_error >= 0.0);
    CHECK(r.evaluations > 0);
  }

  TEST_CASE("gamma identity with an endpoint singularity") {
    const double tol = 1e-10;
    const auto r = integrate_semi_infinite(
        [](double t) { return std::exp(-std::numbers::pi * t) / std::sqrt(t); }, tol);
    CHECK(std::fabs(r.value - 1.0) <= std::max(r.est_error, tol));
  }

  TEST_CASE("finite interval rules are exact on polynomials") {
    const auto r = integrate([](double x) { return 5 * x * x * x * x - 3 * x + 1; }, -1.0, 2.0);
    CHECK(r.value == doctest::Approx(31.5).epsilon(1e-14));
  }

  TEST_CASE("budget exhaustion reports the partial result") {
    QuadratureOptions opt;
    opt.abs_tol = 1e-15;
    opt.max_intervals = 2;
    try {
      (void)integrate([](double x) { return std::sin(1000 * x * x); }, 0.0, 10.0, opt);
      FAIL("expected NonConvergence");
    } catch (const NonConvergence& e) {
      CHECK(e.partial().evaluations > 0);
      CHECK(e.partial().est_error > 1e-15);
    }
  }

  TEST_CASE("eta-integral at the endpoints") {
    const auto top = upsilon_integral(0.45);
    CHECK(top.value > 10.0);
    CHECK(top.value <= kUpsilonIntegralBound);
    CHECK(top.est_error <= 1e-6);
    CHECK(top.value == doctest::Approx(static_cast<double>(oracle::upsilon_integral(0.45L))).epsilon(1e-9));
    const auto low = upsilon_integral(0.01);
    CHECK(low.value < top.value);
    CHECK(low.value == doctest::Approx(static_cast<double>(oracle::upsilon_integral(0.01L))).epsilon(1e-9));
    CHECK_THROWS_AS(upsilon_integral(0.005), BadEta);
    CHECK_THROWS_AS(upsilon_integral(0.46), BadEta);
  }

  TEST_CASE("property: eta grid stays finite and peaks at 0.45") {
    double best = -1.0;
    int best_k = 0;
    for (int k = 1; k <= 45; ++k) {
      const auto r = upsilon_integral(k / 100.0);
      REQUIRE(std::isfinite(r.value));
      REQUIRE(r.est_error <= 1e-6);
      REQUIRE(r.value <= kUpsilonIntegralBound);
      if (r.value > best) {
        best = r.value;
        best_k = k;
      }
    }
    CHECK(best_k == 45);
  }

  TEST_CASE("oscillatory probe") {
    CHECK(satz204_probe(1.0, 0.0).value < kSatz204Bound);
    // |int_0^U| <= int_0^U u^{-1/2} du = 2 sqrt(U)
    CHECK(satz204_probe(1e-8, 0.0).value <= 2e-4 + 1e-12);
    CHECK_THROWS_AS(satz204_probe(0.0, 0.0), DomainError);
    for (double U : {1.0, 10.0})
      for (double mu : {-2.0, 0.0, 3.0}) {
        CAPTURE(U);
        CAPTURE(mu);
        CHECK(satz204_probe(U, mu).value == doctest::Approx(static_cast<double>(oracle::satz204(U, mu))).epsilon(1e-7));
      }
  }

  TEST_CASE("property: probe sweep stays below 26") {
    std::vector<double> mus;
    for (int mu = -5; mu <= 5; ++mu) mus.push_back(mu);
    for (const auto& row : satz204_sweep({1.0, 10.0, 100.0, 1000.0}, mus)) {
      CAPTURE(row.upper);
      CAPTURE(row.mu);
      REQUIRE(row.below_bound);
      REQUIRE(row.result.value < kSatz204Bound);
    }
  }
}
