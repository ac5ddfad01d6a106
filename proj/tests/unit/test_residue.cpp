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
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "idealcount/constants.hpp"
#include "idealcount/errors.hpp"
#include "idealcount/field.hpp"
#include "idealcount/residue.hpp"
#include "oracles.hpp"

using namespace idealcount;

namespace {

const std::string kData = IDEALCOUNT_DATA_DIR;
constexpr double kPi = std::numbers::pi;

FieldSpec field(const char* name) { return load_field(kData + "/fields/" + name + ".json"); }

// h(D) for D < 0 by counting reduced primitive forms (a, b, c).
int reduced_forms(std::int64_t D) {
  int h = 0;
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a)
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
      ++h;
    }
  return h;
}

}  // namespace

TEST_CASE("closed forms") {
  CHECK(kappa_quadratic(-4).value == doctest::Approx(kPi / 4).epsilon(1e-12));
  CHECK(kappa_quadratic(-3).value == doctest::Approx(kPi / (3 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK(kappa_quadratic(5).value == doctest::Approx(2 * std::log((1 + std::sqrt(5.0)) / 2) / std::sqrt(5.0)).epsilon(1e-12));
  CHECK(kappa_quadratic(8).value == doctest::Approx(std::log(1 + std::sqrt(2.0)) / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(kappa_quadratic(-4).value == doctest::Approx(0.7853982).epsilon(1e-7));
  CHECK(kappa_quadratic(-3).value == doctest::Approx(0.6045998).epsilon(1e-7));
  CHECK(kappa_quadratic(5).value == doctest::Approx(0.4304089).epsilon(1e-7));
  CHECK(kappa_quadratic(-4).method == ResidueMethod::imaginary_sum);
  CHECK(kappa_quadratic(5).method == ResidueMethod::real_logsin);
  CHECK(kappa_quadratic(-4).est_error >= 0);
  CHECK_THROWS_AS(kappa_quadratic(20), NotFundamental);
  CHECK_THROWS_AS(kappa_quadratic(1), NotFundamental);
}

TEST_CASE("character sums agree with the Dirichlet series") {
  for (std::int64_t D : {-4, -3, -7, -23, 5, 8, 12, 13, 229}) {
    CAPTURE(D);
    const long double l = oracle::l_one_partial(D, 20'000'000);
    CHECK(kappa_quadratic(D).value == doctest::Approx((double)l).epsilon(1e-9));
  }
}

TEST_CASE("empirical estimate") {
  for (const std::string name : {"gaussian", "sqrt5"}) {
    CAPTURE(name);
    const FieldSpec f = field(name.c_str());
    const double exact = kappa_quadratic(*f.fundamental_disc).value;
    const TauTable t = tau_sieve(f, 1'000'000);
    const Residue r = kappa_empirical(t);
    CHECK(r.method == ResidueMethod::empirical);
    CHECK(r.est_error > 0);
    CHECK(std::fabs(r.value - exact) < r.est_error);
    const Residue small = kappa_empirical(tau_sieve(f, 10'000));
    CHECK(std::fabs(small.value - exact) < small.est_error);
    CHECK(r.est_error < small.est_error);
  }
  CHECK_THROWS_AS(kappa_empirical(tau_sieve(field("gaussian"), 9'999)), TableTooSmall);
}

TEST_CASE("kappa_for picks the exact route when there is one") {
  const Residue g = kappa_for(tau_sieve(field("gaussian"), 10'000));
  CHECK(g.value == doctest::Approx(kPi / 4).epsilon(1e-12));
  CHECK(g.method == ResidueMethod::imaginary_sum);
  const FieldSpec q = parse_field(R"({"label":"Q","degree":1,"r1":1,"r2":0,"disc":1})");
  const Residue one = kappa_for(tau_sieve(q, 100));
  CHECK(one.value == 1.0);
  CHECK(one.method == ResidueMethod::rational);
  const Residue c = kappa_for(tau_sieve(field("cubic23"), 100'000));
  CHECK(c.method == ResidueMethod::empirical);
  CHECK(c.est_error > 0);
}

TEST_CASE("Louboutin examples") {
  for (const char* name : {"gaussian", "sqrt5", "eisenstein", "sqrt2"}) {
    const LouboutinCheck chk = kappa_vs_louboutin(field(name));
    CHECK(chk.ok);
    CHECK(chk.kappa <= chk.bound);
  }
  const LouboutinCheck g = kappa_vs_louboutin(field("gaussian"));
  CHECK(g.bound == doctest::Approx(std::numbers::e * std::log(4.0) / 2).epsilon(1e-14));
  CHECK_THROWS_AS(kappa_vs_louboutin(field("cubic23")), DomainError);
}

TEST_CASE("property: Louboutin inequality and integral class numbers, |D| <= 10^4") {
  int negatives = 0, positives = 0;
  for (std::int64_t a = 3; a <= 10000; ++a)
    for (std::int64_t D : {-a, a}) {
      if (!is_fundamental_discriminant(D)) continue;
      CAPTURE(D);
      const double kappa = kappa_quadratic(D).value;
      CHECK(kappa > 0);
      CHECK(kappa <= kappa_upper(2, std::log(std::fabs((double)D))));
      if (D < 0) {
        ++negatives;
        const double h = class_number_from_kappa(D, kappa);
        CHECK(std::fabs(h - std::round(h)) < 1e-9);
        CHECK(std::lround(h) == reduced_forms(D));
      } else {
        ++positives;
      }
    }
  CHECK(negatives > 3000);
  CHECK(positives > 3000);
  CHECK_THROWS_AS(class_number_from_kappa(5, 1.0), DomainError);
}
