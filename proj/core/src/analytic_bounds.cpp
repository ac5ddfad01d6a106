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

#include "idealcount/analytic_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "idealcount/errors.hpp"
#include "idealcount/special_functions.hpp"

namespace idealcount {
namespace {

constexpr double kPi = std::numbers::pi;

void require_degree(int n) {
  if (n < 2) throw DegreeTooSmall(n);
}

}  // namespace

double mu_K(int n) {
  require_degree(n);
  return -0.5 - 0.5 / n;
}

double nu_K(int n) {
  require_degree(n);
  return 0.5 - 0.5 / n;
}

std::complex<double> alpha_exact(int r1, int r2, double sigma, double t) {
  if (r1 < 0 || r2 < 0 || r1 + 2 * r2 < 2) throw DomainError("alpha_exact: need r1 + 2 r2 >= 2");
  if (t < 0.0) throw DomainError("alpha_exact: t must be non-negative");
  const std::complex<double> z = std::polar(std::exp(-kPi * t), kPi * sigma);
  const std::complex<double> one(1.0, 0.0);
  // z = -1 (odd sigma) always hits 1/(1+z); z = +1 only matters when r2 > 0
  if (t == 0.0 && sigma == std::floor(sigma)) {
    const bool odd = std::fmod(std::fabs(sigma), 2.0) == 1.0;
    if (odd || r2 > 0) throw PoleError("alpha_exact: z = +/-1 at t = 0 with integral sigma");
  }
  return std::pow(one / (one + z), r1 + r2) * std::pow(one / (one - z), r2) - one;
}

std::complex<double> upsilon_product_exact(int n, double sigma, double u, UpsilonVariant variant) {
  require_degree(n);
  if (!(u > 0.0)) throw DomainError("upsilon_product_exact: u must be positive");
  const std::complex<double> ui(0.0, u);
  if (variant == UpsilonVariant::single) {
    // ui/(a + ui) - 1 = -a/(a + ui), evaluated without the subtraction.
    const double a = n * sigma;
    return -a / (a + ui);
  }
  std::complex<double> prod(1.0, 0.0);
  for (int j = 0; j <= n; ++j) {
    const std::complex<double> den(n * (sigma + j), u);
    if (std::abs(den) == 0.0) throw PoleError("upsilon_product_exact: vanishing factor");
    prod *= ui / den;
  }
  return prod - 1.0;
}

double xi1(int n) {
  require_degree(n);
  return 0.5 * (n - 1);
}

double xi2(int n, double ell) {
  require_degree(n);
  const double c = kXi2Constant * n * n;
  if (!(ell > c)) throw DomainError("xi2: ell must exceed 2.78955 n^2");
  return kXi2Constant / std::fabs(1.0 - c / ell);
}

double xi3(int n, double ell) {
  require_degree(n);
  const double c = kXi3Constant * n * n;
  if (!(ell > c)) throw DomainError("xi3: ell must exceed 2.19580 n^2");
  return kXi3Constant / std::fabs(1.0 - c / ell);
}

double xi4(int n) {
  require_degree(n);
  const double a = std::fabs(n * mu_K(n));  // (n+1)/2
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) sum += binomial(n + 1, k) * std::pow(a, -k);
  return std::pow(0.5 * (n + 1), n + 1) * sum;
}

double beta_bound(int n, double sigma, double t) {
  require_degree(n);
  if (!(t > 0.0)) throw DomainError("beta_bound: t must be positive");
  return n / (2.0 * t) * (3.0 * sigma * sigma + std::fabs(sigma) + kPi);
}

double beta_g(int n) {
  require_degree(n);
  return 5.0 / 8.0 + kPi / 2.0 + 1.0 / n + 3.0 / (8.0 * n * n);
}

double beta_g_nu(int n) {
  const double v = nu_K(n);
  return 0.5 * (3.0 * v * v + std::fabs(v) + kPi);
}

double split_point(int n, double X) {
  require_degree(n);
  if (!(X >= 1.0)) throw DomainError("split_point: X must be at least 1");
  return 3.0 * std::pow(n, X);
}

SplitMinimums split_point_minimums(int n) {
  const double m = mu_K(n);
  const double v = nu_K(n);
  return {std::ceil(0.5 * n * (3.0 * m * m + std::fabs(m) + kPi)),
          std::ceil(0.5 * n * (3.0 * v * v + std::fabs(v) + kPi))};
}

ComponentBounds component_bounds(int n, double s, Side side, double X) {
  require_degree(n);
  if (!(s >= 3.0 * n) || !(s * n > kXi2Constant * n * n))
    throw DomainError("component_bounds: split point must satisfy s >= 3n and s n > 2.78955 n^2");
  if (!(X >= 1.0)) throw DomainError("component_bounds: X must be at least 1");
  ComponentBounds cb;
  cb.n = n;
  cb.s_split = s;
  cb.side = side;
  const double ell = s * n;
  const double beta_xi = side == Side::I ? xi2(n, ell) : xi3(n, ell);
  const double ups_xi = side == Side::I ? xi4(n) : xi1(n);
  const double e_term = erfc(std::sqrt(kPi * s)) + erfc(std::sqrt(2.0 * kPi * s)) / std::sqrt(2.0);
  const double two_n = std::pow(2.0, n);
  const double sn = std::sqrt(static_cast<double>(n));
  auto& b = cb.terms;
  const double exponent = side == Side::I ? 3.5 * n - 0.5 : n * (0.5 + 4.0 * n / (n - 1.0)) - 0.5;
  b[0] = std::pow(2.0, 0.5 * n + 1.0) * std::exp(exponent) * std::sqrt(s);
  b[2] = 26.0;
  b[3] = 2.0 * n * n * beta_xi / std::sqrt(ell);
  b[4] = 2.1 * sn * two_n * e_term;
  b[5] = 2.0 * ups_xi / std::sqrt(ell);
  b[6] = 2.1 / s * beta_xi * std::pow(n, 1.5) * two_n * e_term;
  b[7] = 2.0 * beta_xi * ups_xi * n * n / (3.0 * std::pow(ell, 1.5));
  b[8] = 2.1 / s / sn * two_n * ups_xi * e_term;
  b[9] = 2.1 / (s * s) * sn * two_n * beta_xi * ups_xi * e_term;
  for (int k = 3; k < 10; ++k) cb.sum_4_10 += b[k];
  cb.max_main = std::max({b[3], b[5], b[7]});
  b[1] = 26.0 / sn + 3.0 * cb.max_main;
  cb.aggregate = b[0] + b[1];
  cb.closed_form = std::pow(2.0, 0.5 * n + 2.0) * std::exp(exponent) * std::sqrt(3.0 * std::pow(n, X));
  cb.dominance_ok = cb.sum_4_10 <= 3.0 * cb.max_main;
  cb.closed_form_ok = cb.aggregate <= cb.closed_form;
  return cb;
}

}  // namespace idealcount
