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

namespace idealcount {

/// Complementary error function for x >= 0, absolute error below 1e-14.
/// Positive-term series below 2.5, Lentz continued fraction above.
double erfc(double x);

/// Upper incomplete gamma function Gamma(1/2, z) for z >= 0.
/// Computed from its own series / continued fraction, independently of erfc.
double incomplete_gamma_half(double z);

/// Riemann zeta for real s > 1 by Euler-Maclaurin: `direct_terms` explicit
/// terms (Neumaier-compensated) plus a Bernoulli tail correction.
double riemann_zeta(double s, long long direct_terms = 16);

/// zeta(1.45), evaluated once with 10^6 explicit terms and cached.
double zeta_1_45();

/// log(n!) for n >= 0.
double log_factorial(int n);

/// Binomial coefficient as a double (exact while it fits in 53 bits).
double binomial(int n, int k);

}  // namespace idealcount
