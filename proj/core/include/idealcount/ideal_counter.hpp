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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idealcount/field.hpp"

namespace idealcount {

/// Residue degrees f_i of the distinct prime ideals above p.
struct LocalFactor {
  std::uint64_t p = 0;
  std::vector<int> residue_degrees;
};

/// Number of ideals of norm p^k for k = 0..kmax: coefficients of prod_i 1/(1 - x^{f_i}).
std::vector<std::uint32_t> local_ideal_counts(const std::vector<int>& residue_degrees, int kmax);

/// Ideals of norm p^k in the quadratic field of discriminant D: sum_{j<=k} chi_D(p^j).
std::uint64_t tau_prime_power_quadratic(std::int64_t D, std::uint64_t p, int k);

/// Dedekind factorisation data for a monic integer polynomial generating
/// a field of discriminant disc_field. The index [O_K : Z[theta]] is fixed
/// once from disc(poly) = index^2 disc_field.
class DedekindContext {
 public:
  DedekindContext(std::vector<std::int64_t> poly, std::int64_t disc_field);
  ~DedekindContext();
  DedekindContext(const DedekindContext&);
  DedekindContext& operator=(const DedekindContext&);

  /// disc(poly) in decimal.
  std::string poly_discriminant() const;
  /// The index in decimal.
  std::string index() const;
  bool divides_index(std::uint64_t p) const;

  /// Throws IndexDivisor when p divides the index.
  LocalFactor residue_degrees(std::uint64_t p) const;
  /// Number of degree-one primes above p (throws IndexDivisor likewise).
  int degree_one_count(std::uint64_t p) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Free-function form; recomputes the index on every call.
LocalFactor dedekind_residue_degrees(const std::vector<std::int64_t>& poly, std::uint64_t p,
                                     std::int64_t disc_field);

/// Dense tau_1..tau_X with prefix sums I(x).
class TauTable {
 public:
  TauTable(FieldSpec field, std::vector<std::uint32_t> tau);  // tau[0] unused, tau[1..X]

  const FieldSpec& field() const noexcept { return field_; }
  std::uint64_t X() const noexcept { return tau_.size() - 1; }
  std::uint32_t tau(std::uint64_t m) const { return tau_.at(m); }
  std::uint64_t prefix(std::uint64_t m) const { return prefix_.at(m); }
  const std::vector<std::uint32_t>& tau_values() const noexcept { return tau_; }
  const std::vector<std::uint64_t>& prefix_values() const noexcept { return prefix_; }

 private:
  FieldSpec field_;
  std::vector<std::uint32_t> tau_;
  std::vector<std::uint64_t> prefix_;
};

struct SieveOptions {
  std::uint64_t segment_size = std::uint64_t{1} << 22;
  unsigned threads = 0;  // 0: hardware concurrency
  std::uint64_t max_x = 4'000'000'000ULL;
};

/// Multiplicative segmented sieve. Quadratic fields use the Kronecker
/// character of fundamental_disc; otherwise poly drives Dedekind factorisation.
TauTable tau_sieve(const FieldSpec& field, std::uint64_t X, const SieveOptions& options = {});

/// I(x) = prefix[floor x]; RangeError for x > X.
std::uint64_t ideal_count(const TauTable& table, double x);

/// Ideals of norm m for the class-number-one fields D in {-3,-4,-7,-8,-11},
/// by counting norm-form representations and dividing by the unit count.
std::uint64_t lattice_oracle(std::int64_t D, std::uint64_t m);

/// Binary cache: header then little-endian u32 tau values.
void save_tau_cache(const TauTable& table, const std::string& path);
/// Returns nothing when the file is absent or was written for another
/// field, format version or a smaller X. A larger cached X is truncated.
std::optional<TauTable> load_tau_cache(const FieldSpec& field, std::uint64_t X, const std::string& path);

}  // namespace idealcount
