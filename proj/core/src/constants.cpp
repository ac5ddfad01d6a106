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

#include "idealcount/constants.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "idealcount/analytic_bounds.hpp"
#include "idealcount/special_functions.hpp"

namespace idealcount {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
const double kLnPi = std::log(std::numbers::pi);
const double kLn2Pi = std::log(2.0 * std::numbers::pi);

void require_degree(int n) {
  if (n < 2) throw DegreeTooSmall(n);
}

double abs_disc(const FieldSpec& f) { return std::fabs(static_cast<double>(f.disc)); }

LogMagnitude lm(double ln) { return LogMagnitude::from_log(ln); }

}  // namespace

LogMagnitude lambda_sunley(int n) {
  require_degree(n);
  return lm(28.2 * n + 5.0 + 2.5 * (n + 1) * std::log(n + 1.0));
}

LogMagnitude lambda_K(int n) {
  require_degree(n);
  const LogMagnitude inner =
      lm(std::log(44.39) + n * std::log(0.082) + log_factorial(n)) + LogMagnitude::from_double(13.0 / (n - 1));
  return lm(std::log(0.17) + std::log((6.0 * n - 2.0) / (n - 1)) + n * std::log(2.26) + 4.0 * n + 26.0 / n +
            (n + 0.5) * std::log(n)) *
         inner;
}

LogMagnitude a7(int n) {
  require_degree(n);
  return lm((4.0 * n + 2.0) * kLn2 + n * std::log(5.0) + log_factorial(n));
}

LogMagnitude q1_log(int n) {
  require_degree(n);
  const double ln_first = std::log(5.0) + (n - 0.45) * kLn2 + n * std::log(zeta_1_45()) -
                          (n - 1) * std::log(std::log(184607.0)) - 0.95 * n * kLn2Pi + log_factorial(n);
  return lm(ln_first) + LogMagnitude::from_double(13.0 / (n - 1));
}

double q1(int n) { return q1_log(n).to_double(); }

double v1(double eta, int N0, int n) {
  if (N0 < 2) throw DomainError("v1: N0 must be at least 2");
  return v1_at_disc(eta, static_cast<double>(delta0(N0)), n);
}

double v1_at_disc(double eta, double d, int n) {
  require_degree(n);
  if (!(eta >= 0.01 && eta <= 0.45)) throw BadEta("v1: eta must lie in [0.01, 0.45]");
  if (!(d > 1.0)) throw DomainError("v1: discriminant floor must exceed 1");
  const double ln = std::log(kV1Constant) + n * std::log(riemann_zeta(1.0 + eta)) + (n - eta) * kLn2 +
                    log_factorial(n) - 0.5 * std::log(d) - (n - 1) * std::log(std::log(d)) -
                    n * (0.5 + eta) * kLn2Pi;
  return std::exp(ln);
}

double v2(int n) {
  require_degree(n);
  return 4.0 / (n + 1) * std::pow(std::numbers::e / (n - 1), n - 1);
}

double v3(int n, int N0) {
  if (N0 < 2) throw DomainError("v3: N0 must be at least 2");
  return v3_at_disc(n, static_cast<double>(delta0(N0)));
}

double v3_at_disc(int n, double d) {
  require_degree(n);
  if (!(d > 0.0)) throw DomainError("v3: discriminant floor must be positive");
  return 2.0 * std::pow(kPi, -0.5 * n) / std::sqrt(d) * std::pow(std::numbers::e / (n - 1), n - 1);
}

LogMagnitude q2(int n) {
  require_degree(n);
  return lm(1.5 * kLn2 - (0.5 * n + 1.5) * kLnPi + 4.0 * n - 0.5 + 0.5 * std::log(3.0 * n));
}

LogMagnitude q3(int n) {
  require_degree(n);
  return lm((n + 1.5) * kLn2 + (0.5 * n - 1.5) * kLnPi + n * (1.0 + 4.0 * n / (n - 1.0)) - 0.5 +
            0.5 * std::log(3.0 * n));
}

LogMagnitude a12(int n) {
  require_degree(n);
  return lm(3.5 * n - 0.5 * (n + 1) * kLnPi + (0.5 - n) * kLn2 + (n + 1.5) * std::log(n));
}

LogMagnitude a13(int n) {
  require_degree(n);
  return lm(5.0 * n + 0.5 + std::log(16.0) + 0.5 * (n - 1) * kLnPi + (n + 2.0) * std::log(n));
}

LogMagnitude q4(int n) { return q2(n) * lm(n * std::log(4.0 * n)); }

LogMagnitude q5(int n) { return q3(n) * lm((0.5 - 0.5 / n) * std::log(n + 1.0)); }

LogMagnitude q6(int n) {
  return lm(-kLnPi + std::log((6.0 * n - 2.0) / (n - 1)) + 25.0 / n) * q1_log(n) * q4(n);
}

double louboutin_alpha(int n) {
  require_degree(n);
  return std::pow(std::numbers::e / (2.0 * (n - 1)), n - 1);
}

LogMagnitude q7_upper(int n) {
  const double alpha = louboutin_alpha(n);
  const double middle = alpha * std::pow(kPi, -0.5 * n) * std::pow(2.0 * n, -(n - 1.0) / (n + 1.0));
  return LogMagnitude::from_double(n * alpha / 2.0 + middle) + q6(n);
}

LogMagnitude q7_at(int n, double abs_disc_value, double x) {
  const double alpha = louboutin_alpha(n);
  if (!(abs_disc_value >= 1.0) || !(x > 0.0)) throw DomainError("q7_at: need |disc| >= 1 and x > 0");
  // |disc|^{1/2} / z with z = |disc|^{1/(n+1)} x^{(n-1)/(n+1)}
  const double ln_ratio = (0.5 - 1.0 / (n + 1.0)) * std::log(abs_disc_value) - (n - 1.0) / (n + 1.0) * std::log(x);
  const double middle = alpha * std::pow(kPi, -0.5 * n) * std::exp(ln_ratio);
  return LogMagnitude::from_double(n * alpha / 2.0 + middle) + q6(n);
}

LogMagnitude q8_upper(int n) { return q7_upper(n) + LogMagnitude::from_double(louboutin_alpha(n) * n); }

const ConstantRow& constant_row(int n) {
  require_degree(n);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ConstantRow>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto row = std::make_unique<ConstantRow>();
  row->n = n;
  row->lambda_S = lambda_sunley(n);
  row->lambda_K = lambda_K(n);
  row->a7 = a7(n);
  row->q1 = q1_log(n);
  row->a12 = a12(n);
  row->a13 = a13(n);
  row->q2 = q2(n);
  row->q3 = q3(n);
  row->q4 = q4(n);
  row->q5 = q5(n);
  row->q6 = q6(n);
  row->q7_upper = q7_upper(n);
  row->q8_upper = q8_upper(n);
  const int N0 = n < 7 ? n : 7;
  row->v1 = v1(0.45, N0, n);
  row->v2 = v2(n);
  row->v3 = v3(n, N0);
  row->alpha = louboutin_alpha(n);
  const double ell = split_point(n) * n;
  row->xi1 = xi1(n);
  row->xi2 = xi2(n, ell);
  row->xi3 = xi3(n, ell);
  row->xi4 = xi4(n);
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(row));
  return *it->second;
}

double kappa_upper(int n, double log_abs_disc) {
  require_degree(n);
  if (!(log_abs_disc > 0.0)) throw DomainError("kappa_upper: log|disc| must be positive");
  return std::pow(std::numbers::e * log_abs_disc / (2.0 * (n - 1)), n - 1);
}

double zeta0_upper(const FieldSpec& f) {
  require_degree(f.degree);
  return compute_A_K(f) * kappa_upper(f.degree, std::log(abs_disc(f)));
}

double rademacher_rhs(double sigma, double t, double eta, const FieldSpec& f) {
  require_degree(f.degree);
  if (!(eta > 0.0 && eta <= 0.5)) throw DomainError("rademacher_rhs: need 0 < eta <= 1/2");
  if (!(sigma >= -eta && sigma <= 1.0 + eta)) throw DomainError("rademacher_rhs: sigma outside [-eta, 1+eta]");
  const std::complex<double> s(sigma, t);
  if (std::abs(1.0 - s) == 0.0) throw PoleError("rademacher_rhs: pole at s = 1");
  const int n = f.degree;
  const double ratio = std::abs((1.0 + s) / (1.0 - s));
  const double base_ln = std::log(abs_disc(f)) + n * std::log(std::abs(1.0 + s) / (2.0 * kPi));
  return 3.0 * ratio * std::exp(0.5 * (1.0 + eta - sigma) * base_ln + n * std::log(riemann_zeta(1.0 + eta)));
}

LogMagnitude thm_bound(const FieldSpec& f, double x, BoundKind which) {
  const int n = f.degree;
  require_degree(n);
  if (x < 0.0) throw DomainError("thm_bound: x must be non-negative");
  if (x == 0.0) return LogMagnitude::zero();
  const double ld = std::log(abs_disc(f));
  const LogMagnitude lambda = which == BoundKind::improved ? lambda_K(n) : lambda_sunley(n);
  const int log_power = which == BoundKind::improved ? n - 1 : n;
  return lambda * lm(ld / (n + 1.0) + (1.0 - 2.0 / (n + 1.0)) * std::log(x)) * LogMagnitude::from_double(ld).pow(log_power);
}

double b_K(const FieldSpec& f, double x) {
  const int n = f.degree;
  require_degree(n);
  if (x < 0.0) throw DomainError("b_K: x must be non-negative");
  if (x < 2.0) return 1.0;
  if (x <= abs_disc(f)) return n * binomial(n - 1, (n - 1) / 2);
  return q1(n);
}

double ik_upper(const FieldSpec& f, double x) {
  return b_K(f, x) * std::pow(std::log(abs_disc(f)), f.degree - 1) * x;
}

double partial_sum_bound(const FieldSpec& f, double theta, double x, PartialSumKind which) {
  const int n = f.degree;
  require_degree(n);
  const double lpow = std::pow(std::log(abs_disc(f)), n - 1);
  switch (which) {
    case PartialSumKind::below1:
      if (!(theta > 0.0 && theta < 1.0) || !(x >= 1.0)) throw DomainError("partial_sum_bound: below1 needs 0<theta<1, x>=1");
      return 2.0 * b_K(f, x) * (1.0 / (1.0 - theta) + 1.0) * lpow * std::pow(x, 1.0 - theta);
    case PartialSumKind::above1:
      if (!(theta > 1.0) || !(x >= 1.0)) throw DomainError("partial_sum_bound: above1 needs theta>1, x>=1");
      return b_K(f, x) * theta / (theta - 1.0) * std::pow(2.0, theta - 1.0) * lpow * std::pow(x, 1.0 - theta);
    case PartialSumKind::log:
      if (!(x >= 2.0)) throw DomainError("partial_sum_bound: log case needs x>=2");
      return b_K(f, x) * (1.0 + 2.0 / kLn2) * lpow * std::log(x);
  }
  throw DomainError("partial_sum_bound: unknown kind");
}

}  // namespace idealcount
