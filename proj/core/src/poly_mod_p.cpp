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

#include "idealcount/poly_mod_p.hpp"

#include <algorithm>
#include <utility>

#include "idealcount/errors.hpp"

namespace idealcount {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DivideByZero("invmod: zero has no inverse");
  return powmod(a, p - 2, p);
}

PolyModP::PolyModP(Coeffs coeffs, std::uint64_t p) : c_(std::move(coeffs)), p_(p) {
  if (p < 2 || p >= (1ULL << 32)) throw DomainError("PolyModP: modulus must lie in [2, 2^32)");
  for (auto& v : c_) v %= p_;
  trim();
}

PolyModP PolyModP::from_integers(const std::vector<std::int64_t>& coeffs, std::uint64_t p) {
  Coeffs c;
  c.reserve(coeffs.size());
  const auto sp = static_cast<std::int64_t>(p);
  for (std::int64_t v : coeffs) c.push_back(static_cast<std::uint64_t>(((v % sp) + sp) % sp));
  return PolyModP(std::move(c), p);
}

void PolyModP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyModP PolyModP::operator+(const PolyModP& o) const {
  Coeffs r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + o.c_[i]) % p_;
  return PolyModP(std::move(r), p_);
}

PolyModP PolyModP::operator-(const PolyModP& o) const {
  Coeffs r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + p_ - o.c_[i]) % p_;
  return PolyModP(std::move(r), p_);
}

PolyModP PolyModP::operator*(const PolyModP& o) const {
  if (is_zero() || o.is_zero()) return PolyModP({}, p_);
  Coeffs r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
  return PolyModP(std::move(r), p_);
}

void PolyModP::divmod(const PolyModP& d, PolyModP& q, PolyModP& r) const {
  if (d.is_zero()) throw DivideByZero("PolyModP: division by the zero polynomial");
  Coeffs rem = c_;
  const int dd = d.degree();
  const int nd = degree();
  if (nd < dd) {
    q = PolyModP({}, p_);
    r = *this;
    return;
  }
  Coeffs quo(static_cast<std::size_t>(nd - dd + 1), 0);
  const std::uint64_t inv = invmod(d.lead(), p_);
  for (int i = nd; i >= dd; --i) {
    const std::uint64_t coef = mulmod(rem[static_cast<std::size_t>(i)], inv, p_);
    quo[static_cast<std::size_t>(i - dd)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - dd + j)];
      slot = (slot + p_ - mulmod(coef, d.c_[static_cast<std::size_t>(j)], p_)) % p_;
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  q = PolyModP(std::move(quo), p_);
  r = PolyModP(std::move(rem), p_);
}

PolyModP PolyModP::operator/(const PolyModP& d) const {
  PolyModP q({}, p_), r({}, p_);
  divmod(d, q, r);
  return q;
}

PolyModP PolyModP::operator%(const PolyModP& d) const {
  PolyModP q({}, p_), r({}, p_);
  divmod(d, q, r);
  return r;
}

PolyModP PolyModP::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = invmod(lead(), p_);
  Coeffs r = c_;
  for (auto& v : r) v = mulmod(v, inv, p_);
  return PolyModP(std::move(r), p_);
}

PolyModP PolyModP::derivative() const {
  if (c_.size() <= 1) return PolyModP({}, p_);
  Coeffs r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulmod(c_[i], i % p_, p_);
  return PolyModP(std::move(r), p_);
}

PolyModP gcd(PolyModP a, PolyModP b) {
  while (!b.is_zero()) {
    PolyModP r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyModP powmod(const PolyModP& base, std::uint64_t e, const PolyModP& m) {
  PolyModP result = PolyModP::constant(1, m.prime()) % m;
  PolyModP b = base % m;
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e > 0) b = (b * b) % m;
  }
  return result;
}

namespace {

// f(x) = h(x^p) = h(x)^p over F_p (coefficients are fixed by Frobenius).
PolyModP pth_root(const PolyModP& f) {
  const std::uint64_t p = f.prime();
  PolyModP::Coeffs r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
  return PolyModP(std::move(r), p);
}

PolyModP lcm(const PolyModP& a, const PolyModP& b) { return ((a * b) / gcd(a, b)).monic(); }

}  // namespace

PolyModP radical(const PolyModP& f_in) {
  if (f_in.is_zero()) throw DomainError("radical: zero polynomial");
  const PolyModP f = f_in.monic();
  if (f.degree() <= 0) return f;
  const PolyModP df = f.derivative();
  if (df.is_zero()) return radical(pth_root(f));
  const PolyModP g = gcd(f, df);
  if (g.degree() == 0) return f;
  // f/g holds every factor whose multiplicity is prime to p; factors with
  // multiplicity divisible by p survive only in g.
  return lcm(f / g, radical(g));
}

std::vector<int> distinct_degree_factor_degrees(const PolyModP& f_in) {
  std::vector<int> out;
  PolyModP f = f_in.monic();
  const std::uint64_t p = f.prime();
  const PolyModP x = PolyModP::x(p);
  PolyModP h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, p, f);
    const PolyModP g = gcd(f, h - x);
    if (g.degree() > 0) {
      for (int k = 0; k < g.degree() / d; ++k) out.push_back(d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back(f.degree());
  std::sort(out.begin(), out.end());
  return out;
}

int distinct_root_count(const PolyModP& f_in) {
  const PolyModP f = f_in.monic();
  if (f.degree() <= 0) return 0;
  const PolyModP x = PolyModP::x(f.prime());
  return gcd(f, powmod(x, f.prime(), f) - x).degree();
}

}  // namespace idealcount
