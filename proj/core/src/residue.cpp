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

#include "idealcount/residue.hpp"

#include <cmath>
#include <numbers>

#include "compensated.hpp"
#include "idealcount/constants.hpp"
#include "idealcount/errors.hpp"
#include "idealcount/kronecker.hpp"

namespace idealcount {
using detail::CompensatedSum;

std::string to_string(ResidueMethod m) {
  switch (m) {
    case ResidueMethod::imaginary_sum: return "imaginary_sum";
    case ResidueMethod::real_logsin: return "real_logsin";
    case ResidueMethod::empirical: return "empirical";
    case ResidueMethod::rational: return "rational";
  }
  return "unknown";
}

Residue kappa_quadratic(std::int64_t D) {
  if (!is_fundamental_discriminant(D)) throw NotFundamental("kappa_quadratic: " + std::to_string(D) + " is not fundamental");
  const double pi = std::numbers::pi;
  if (D < 0) {
    const std::int64_t m = -D;
    std::int64_t s = 0;  // exact integer sum of chi(a) a
    for (std::int64_t a = 1; a < m; ++a) s += kronecker_symbol(D, a) * a;
    return {-pi * static_cast<double>(s) * std::pow(static_cast<double>(m), -1.5), ResidueMethod::imaginary_sum, 0.0};
  }
  // chi is even for D > 0, so pair a with D - a: sin(pi a / D) = sin(pi (D-a) / D).
  CompensatedSum sum;
  for (std::int64_t a = 1; 2 * a < D; ++a) {
    const int chi = kronecker_symbol(D, a);
    if (chi == 0) continue;
    sum.add(2.0 * chi * std::log(std::sin(pi * static_cast<double>(a) / static_cast<double>(D))));
  }
  // a = D/2 (D even) has sin = 1 and contributes nothing.
  return {-sum.value() / std::sqrt(static_cast<double>(D)), ResidueMethod::real_logsin, 0.0};
}

Residue kappa_empirical(const TauTable& table) {
  const std::uint64_t X = table.X();
  if (X < 10'000) throw TableTooSmall("kappa_empirical: table must reach at least 10^4");
  const double x = static_cast<double>(X);
  Residue r;
  r.method = ResidueMethod::empirical;
  r.value = static_cast<double>(table.prefix(X)) / x;
  if (table.field().degree >= 2)
    r.est_error = thm_bound(table.field(), x, BoundKind::improved).to_double() / x;
  else
    r.est_error = 5.0 * r.value * std::pow(x, -1.0 / 3.0);
  return r;
}

Residue kappa_for(const TauTable& table) {
  const FieldSpec& field = table.field();
  if (field.degree == 1) return {1.0, ResidueMethod::rational, 0.0};
  if (field.fundamental_disc) return kappa_quadratic(*field.fundamental_disc);
  return kappa_empirical(table);
}

LouboutinCheck kappa_vs_louboutin(const FieldSpec& field) {
  if (field.degree != 2 || !field.fundamental_disc)
    throw DomainError("kappa_vs_louboutin: needs a quadratic field with fundamental_disc");
  LouboutinCheck c;
  c.kappa = kappa_quadratic(*field.fundamental_disc).value;
  c.bound = kappa_upper(2, std::log(std::fabs(static_cast<double>(field.disc))));
  c.ok = c.kappa <= c.bound;
  return c;
}

double class_number_from_kappa(std::int64_t D, double kappa) {
  if (D >= 0) throw DomainError("class_number_from_kappa: D must be negative");
  const double w = D == -4 ? 4.0 : (D == -3 ? 6.0 : 2.0);
  return kappa * w * std::sqrt(static_cast<double>(-D)) / (2.0 * std::numbers::pi);
}

}  // namespace idealcount
