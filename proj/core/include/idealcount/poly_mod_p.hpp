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
#include <vector>

namespace idealcount {

/// Dense polynomial over F_p, constant term first, no trailing zeros.
/// Requires p < 2^32 so products fit in 64 bits.
class PolyModP {
 public:
  using Coeffs = std::vector<std::uint64_t>;

  PolyModP(Coeffs coeffs, std::uint64_t p);
  /// Reduces signed integer coefficients mod p.
  static PolyModP from_integers(const std::vector<std::int64_t>& coeffs, std::uint64_t p);
  static PolyModP x(std::uint64_t p) { return PolyModP({0, 1}, p); }
  static PolyModP constant(std::uint64_t c, std::uint64_t p) { return PolyModP({c}, p); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const noexcept { return c_.empty(); }
  std::uint64_t prime() const noexcept { return p_; }
  const Coeffs& coeffs() const noexcept { return c_; }
  std::uint64_t lead() const { return c_.back(); }

  PolyModP operator+(const PolyModP& o) const;
  PolyModP operator-(const PolyModP& o) const;
  PolyModP operator*(const PolyModP& o) const;
  bool operator==(const PolyModP& o) const { return p_ == o.p_ && c_ == o.c_; }

  /// Quotient and remainder; divisor must be non-zero.
  void divmod(const PolyModP& d, PolyModP& q, PolyModP& r) const;
  PolyModP operator/(const PolyModP& d) const;
  PolyModP operator%(const PolyModP& d) const;

  PolyModP monic() const;
  PolyModP derivative() const;

 private:
  void trim();
  Coeffs c_;
  std::uint64_t p_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

/// Monic gcd (zero if both are zero).
PolyModP gcd(PolyModP a, PolyModP b);
/// base^e mod m.
PolyModP powmod(const PolyModP& base, std::uint64_t e, const PolyModP& m);

/// Product of the distinct monic irreducible factors of a non-zero f.
/// Squarefree decomposition with p-th power peeling.
PolyModP radical(const PolyModP& f);

/// Degrees of the irreducible factors of a monic squarefree f, ascending.
std::vector<int> distinct_degree_factor_degrees(const PolyModP& f);

/// Number of distinct roots of f in F_p: deg gcd(x^p - x, f).
int distinct_root_count(const PolyModP& f);

}  // namespace idealcount
