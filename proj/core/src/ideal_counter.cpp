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

#include "idealcount/ideal_counter.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "idealcount/errors.hpp"
#include "idealcount/kronecker.hpp"
#include "idealcount/poly_mod_p.hpp"

namespace idealcount {
namespace {

using boost::multiprecision::cpp_int;

std::uint64_t isqrt_u64(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

// Bareiss fraction-free elimination.
cpp_int determinant(std::vector<std::vector<cpp_int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') for monic f.
cpp_int poly_discriminant_exact(const std::vector<std::int64_t>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<cpp_int> df(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) df[static_cast<std::size_t>(i - 1)] = cpp_int(f[static_cast<std::size_t>(i)]) * i;
  const int size = 2 * n - 1;
  std::vector<std::vector<cpp_int>> syl(static_cast<std::size_t>(size), std::vector<cpp_int>(static_cast<std::size_t>(size), 0));
  // Coefficients highest degree first.
  for (int r = 0; r < n - 1; ++r)
    for (int j = 0; j <= n; ++j) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = f[static_cast<std::size_t>(n - j)];
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= n - 1; ++j)
      syl[static_cast<std::size_t>(n - 1 + r)][static_cast<std::size_t>(r + j)] = df[static_cast<std::size_t>(n - 1 - j)];
  cpp_int res = determinant(std::move(syl));
  if ((n * (n - 1) / 2) % 2 == 1) res = -res;
  return res;
}

}  // namespace

std::vector<std::uint32_t> local_ideal_counts(const std::vector<int>& degrees, int kmax) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(kmax) + 1, 0);
  c[0] = 1;
  for (int f : degrees) {
    if (f < 1) throw DomainError("local_ideal_counts: residue degrees must be positive");
    for (int k = f; k <= kmax; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - f)];
  }
  return c;
}

std::uint64_t tau_prime_power_quadratic(std::int64_t D, std::uint64_t p, int k) {
  if (k < 0) throw DomainError("tau_prime_power_quadratic: k must be non-negative");
  const int chi = kronecker(D, static_cast<std::int64_t>(p));
  if (chi == 1) return static_cast<std::uint64_t>(k) + 1;
  if (chi == -1) return k % 2 == 0 ? 1 : 0;
  return 1;
}

struct DedekindContext::Impl {
  std::vector<std::int64_t> poly;
  std::int64_t disc_field = 0;
  cpp_int disc_poly;
  cpp_int index;
};

DedekindContext::DedekindContext(std::vector<std::int64_t> poly, std::int64_t disc_field)
    : impl_(std::make_unique<Impl>()) {
  if (poly.size() < 2 || poly.back() != 1) throw DomainError("DedekindContext: polynomial must be monic of degree >= 1");
  if (disc_field == 0) throw DomainError("DedekindContext: field discriminant must be non-zero");
  impl_->poly = std::move(poly);
  impl_->disc_field = disc_field;
  impl_->disc_poly = impl_->poly.size() == 2 ? cpp_int(1) : poly_discriminant_exact(impl_->poly);
  if (impl_->disc_poly == 0) throw InvariantViolation("poly is separable", "disc(poly) = 0");
  const cpp_int df(disc_field);
  if (impl_->disc_poly % df != 0 || (impl_->disc_poly / df) < 0)
    throw InvariantViolation("disc(poly) = index^2 * disc", "disc(poly) = " + impl_->disc_poly.str());
  const cpp_int sq = impl_->disc_poly / df;
  const cpp_int root = boost::multiprecision::sqrt(sq);
  if (root * root != sq)
    throw InvariantViolation("disc(poly) = index^2 * disc", "quotient " + sq.str() + " is not a square");
  impl_->index = root;
}

DedekindContext::~DedekindContext() = default;
DedekindContext::DedekindContext(const DedekindContext& o) : impl_(std::make_unique<Impl>(*o.impl_)) {}
DedekindContext& DedekindContext::operator=(const DedekindContext& o) {
  if (this != &o) impl_ = std::make_unique<Impl>(*o.impl_);
  return *this;
}

std::string DedekindContext::poly_discriminant() const { return impl_->disc_poly.str(); }
std::string DedekindContext::index() const { return impl_->index.str(); }

bool DedekindContext::divides_index(std::uint64_t p) const {
  if (impl_->index == 1) return false;
  return impl_->index % p == 0;
}

LocalFactor DedekindContext::residue_degrees(std::uint64_t p) const {
  if (divides_index(p))
    throw IndexDivisor("prime " + std::to_string(p) + " divides the index " + impl_->index.str() +
                           "; Dedekind factorisation cannot certify it",
                       static_cast<long long>(p));
  const PolyModP f = PolyModP::from_integers(impl_->poly, p);
  return {p, distinct_degree_factor_degrees(radical(f))};
}

int DedekindContext::degree_one_count(std::uint64_t p) const {
  if (divides_index(p))
    throw IndexDivisor("prime " + std::to_string(p) + " divides the index " + impl_->index.str() +
                           "; Dedekind factorisation cannot certify it",
                       static_cast<long long>(p));
  return distinct_root_count(PolyModP::from_integers(impl_->poly, p));
}

LocalFactor dedekind_residue_degrees(const std::vector<std::int64_t>& poly, std::uint64_t p, std::int64_t disc_field) {
  return DedekindContext(poly, disc_field).residue_degrees(p);
}

TauTable::TauTable(FieldSpec field, std::vector<std::uint32_t> tau) : field_(std::move(field)), tau_(std::move(tau)) {
  if (tau_.empty()) tau_.push_back(0);
  tau_[0] = 0;
  prefix_.assign(tau_.size(), 0);
  for (std::size_t m = 1; m < tau_.size(); ++m) prefix_[m] = prefix_[m - 1] + tau_[m];
}

TauTable tau_sieve(const FieldSpec& field, std::uint64_t X, const SieveOptions& options) {
  if (X < 1) throw DomainError("tau_sieve: X must be at least 1");
  if (X > options.max_x)
    throw RangeError("tau_sieve: X = " + std::to_string(X) + " exceeds the configured limit " +
                     std::to_string(options.max_x) + "; raise SieveOptions::max_x if memory allows (~12 bytes per entry)");
  if (options.segment_size < 1024) throw DomainError("tau_sieve: segment size must be at least 1024");

  std::vector<std::uint32_t> tau(X + 1, 1);
  tau[0] = 0;
  if (field.degree == 1) return TauTable(field, std::move(tau));

  // Local data source: quadratic character or Dedekind factorisation.
  std::optional<DedekindContext> dedekind;
  std::vector<std::int8_t> chi_table;
  std::int64_t D = 0;
  if (field.fundamental_disc) {
    D = *field.fundamental_disc;
    if (!is_fundamental_discriminant(D)) throw NotFundamental("tau_sieve: fundamental_disc is not fundamental");
    const std::uint64_t period = static_cast<std::uint64_t>(D < 0 ? -D : D);
    if (period <= 10'000'000) {
      chi_table.resize(period);
      for (std::uint64_t a = 0; a < period; ++a)
        chi_table[a] = static_cast<std::int8_t>(kronecker_symbol(D, static_cast<std::int64_t>(a)));
    }
  } else if (field.poly) {
    dedekind.emplace(*field.poly, field.disc);
  } else {
    throw DomainError("tau_sieve: field needs fundamental_disc or poly");
  }
  auto chi = [&](std::uint64_t q) -> int {
    if (!chi_table.empty()) return chi_table[q % chi_table.size()];
    return kronecker_symbol(D, static_cast<std::int64_t>(q));
  };
  auto degree_one = [&](std::uint64_t q) -> std::uint32_t {
    if (dedekind) return static_cast<std::uint32_t>(dedekind->degree_one_count(q));
    return static_cast<std::uint32_t>(1 + chi(q));
  };

  // Full local factors for primes up to sqrt(X).
  const std::uint64_t root = isqrt_u64(X);
  const std::vector<std::uint64_t> small = primes_up_to(root);
  std::vector<std::vector<std::uint32_t>> local(small.size());
  for (std::size_t i = 0; i < small.size(); ++i) {
    const std::uint64_t p = small[i];
    int kmax = 0;
    for (std::uint64_t pk = 1; pk <= X / p; pk *= p) ++kmax;
    if (dedekind) {
      local[i] = local_ideal_counts(dedekind->residue_degrees(p).residue_degrees, kmax);
    } else {
      local[i].resize(static_cast<std::size_t>(kmax) + 1);
      for (int k = 0; k <= kmax; ++k)
        local[i][static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(tau_prime_power_quadratic(D, p, k));
    }
  }

  const std::uint64_t seg = options.segment_size;
  const std::uint64_t segments = (X + seg) / seg;  // covers [0, X]
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, segments));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    std::vector<std::uint64_t> rem;
    try {
      for (;;) {
        const std::uint64_t s = next.fetch_add(1);
        if (s >= segments) break;
        const std::uint64_t lo = std::max<std::uint64_t>(1, s * seg);
        const std::uint64_t hi = std::min<std::uint64_t>(X + 1, (s + 1) * seg);  // exclusive
        if (lo >= hi) continue;
        rem.resize(hi - lo);
        for (std::uint64_t m = lo; m < hi; ++m) rem[m - lo] = m;
        for (std::size_t i = 0; i < small.size(); ++i) {
          const std::uint64_t p = small[i];
          if (p * p >= hi) break;
          const auto& lp = local[i];
          for (std::uint64_t m = ((lo + p - 1) / p) * p; m < hi; m += p) {
            std::uint64_t r = rem[m - lo];
            int k = 0;
            while (r % p == 0) {
              r /= p;
              ++k;
            }
            rem[m - lo] = r;
            tau[m] *= lp[static_cast<std::size_t>(k)];
          }
        }
        // What remains is 1 or a single prime to the first power.
        for (std::uint64_t m = lo; m < hi; ++m) {
          const std::uint64_t r = rem[m - lo];
          if (r > 1 && tau[m] != 0) tau[m] *= degree_one(r);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(segments);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return TauTable(field, std::move(tau));
}

std::uint64_t ideal_count(const TauTable& table, double x) {
  if (std::isnan(x) || x < 0.0) throw DomainError("ideal_count: x must be non-negative");
  if (x > static_cast<double>(table.X())) throw RangeError("ideal_count: x exceeds the table limit");
  return table.prefix(static_cast<std::uint64_t>(std::floor(x)));
}

std::uint64_t lattice_oracle(std::int64_t D, std::uint64_t m) {
  std::uint64_t units = 2;
  if (D == -4) units = 4;
  if (D == -3) units = 6;
  if (D != -3 && D != -4 && D != -7 && D != -8 && D != -11)
    throw UnsupportedDiscriminant("lattice_oracle: D must be one of -3, -4, -7, -8, -11");
  if (m < 1) throw DomainError("lattice_oracle: m must be positive");
  std::uint64_t reps = 0;
  const auto mm = static_cast<std::int64_t>(m);
  if (D % 4 == 0) {
    // a^2 + c b^2 = m
    const std::int64_t c = -D / 4;
    for (std::int64_t b = 0; c * b * b <= mm; ++b) {
      const std::int64_t rest = mm - c * b * b;
      const auto a = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(rest)));
      if (a * a != rest) continue;
      const std::uint64_t sign_a = a == 0 ? 1 : 2;
      const std::uint64_t sign_b = b == 0 ? 1 : 2;
      reps += sign_a * sign_b;
    }
  } else {
    // a^2 + ab + c b^2 = m, i.e. (2a+b)^2 + (4c-1) b^2 = 4m
    const std::int64_t c = (1 - D) / 4;
    const std::int64_t k = 4 * c - 1;
    const auto bmax = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(4 * mm / k)));
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      const std::int64_t rest = 4 * mm - k * b * b;
      const auto s = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(rest)));
      if (s * s != rest) continue;
      // t = 2a + b is +s or -s; s = 0 gives a single point
      if (((s - b) % 2 + 2) % 2 == 0) reps += s == 0 ? 1 : 2;
    }
  }
  if (reps % units != 0) throw InvariantViolation("representations divisible by units", std::to_string(reps));
  return reps / units;
}

}  // namespace idealcount
