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

#include "idealcount/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "idealcount/errors.hpp"

namespace idealcount {

namespace {

// erf(x) = 2x e^{-x^2}/sqrt(pi) * sum_k (2x^2)^k / (1*3*...*(2k+1)); all terms positive.
double erf_series(double x) {
  const double x2 = x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= 2.0 * x2 / (2.0 * k + 1.0);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return 2.0 * x * std::exp(-x2) / std::sqrt(std::numbers::pi) * sum;
}

// erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), modified Lentz.
double erfc_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int k = 1; k < 5000; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x * x) / std::sqrt(std::numbers::pi) / f;
}

// Neumaier compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

}  // namespace

double erfc(double x) {
  if (std::isnan(x) || x < 0.0) throw DomainError("erfc requires x >= 0");
  if (x < 2.5) return 1.0 - erf_series(x);
  if (x > 27.3) return 0.0;  // below the smallest subnormal
  return erfc_continued_fraction(x);
}

double incomplete_gamma_half(double z) {
  if (std::isnan(z) || z < 0.0) throw DomainError("incomplete gamma requires z >= 0");
  constexpr double a = 0.5;
  const double gamma_a = std::sqrt(std::numbers::pi);
  if (z == 0.0) return gamma_a;
  if (z < a + 1.0) {
    // lower gamma: z^a e^{-z} sum_k z^k / (a (a+1) ... (a+k))
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 1000; ++k) {
      term *= z / (a + k);
      sum += term;
      if (term < sum * 1e-17) break;
    }
    return gamma_a - std::exp(a * std::log(z) - z) * sum;
  }
  // Legendre continued fraction, modified Lentz.
  constexpr double tiny = 1e-300;
  double b = z + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(a * std::log(z) - z) * h;
}

double riemann_zeta(double s, long long direct_terms) {
  if (!(s > 1.0)) throw DomainError("riemann_zeta requires s > 1");
  if (direct_terms < 8) direct_terms = 8;
  // B_{2k} / (2k)! for k = 1..10
  static constexpr std::array<double, 10> bernoulli_over_factorial = {
      1.0 / 12.0,
      -1.0 / 720.0,
      1.0 / 30240.0,
      -1.0 / 1209600.0,
      1.0 / 47900160.0,
      -691.0 / 1307674368000.0,
      1.0 / 74724249600.0,
      -3617.0 / 10670622842880000.0,
      43867.0 / 5109094217170944000.0,
      -174611.0 / 802857662698291200000.0,
  };
  CompensatedSum acc;
  // Smallest terms first.
  for (long long k = direct_terms - 1; k >= 1; --k) acc.add(std::pow(static_cast<double>(k), -s));
  const double big_n = static_cast<double>(direct_terms);
  acc.add(std::pow(big_n, 1.0 - s) / (s - 1.0));
  acc.add(0.5 * std::pow(big_n, -s));
  // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  double rising = s;  // s (s+1) ... (s+2k-2)
  double power = std::pow(big_n, -s - 1.0);
  for (std::size_t k = 0; k < bernoulli_over_factorial.size(); ++k) {
    const double term = bernoulli_over_factorial[k] * rising * power;
    acc.add(term);
    if (std::fabs(term) < 1e-18) break;
    rising *= (s + 2.0 * k + 1.0) * (s + 2.0 * k + 2.0);
    power /= big_n * big_n;
  }
  return acc.value();
}

double zeta_1_45() {
  static const double value = riemann_zeta(1.45, 1'000'000);
  return value;
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial of a negative integer");
  if (n < 2) return 0.0;
  if (n <= 170) {
    // Exact product in double keeps full precision for the table rows.
    double prod = 1.0;
    for (int k = 2; k <= n; ++k) prod *= k;
    return std::log(prod);
  }
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

}  // namespace idealcount
