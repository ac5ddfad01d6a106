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

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "idealcount/errors.hpp"

namespace idealcount {

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;  // absolute
  std::size_t evaluations = 0;
};

struct ComplexQuadratureResult {
  std::complex<double> value;
  double est_error = 0.0;
  std::size_t evaluations = 0;
};

/// Thrown when the estimated error is still above tolerance once the
/// interval budget is spent; partial() holds the best estimate reached.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, QuadratureResult partial) : Error(what), partial_(partial) {}
  const QuadratureResult& partial() const noexcept { return partial_; }

 private:
  QuadratureResult partial_;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  std::size_t max_intervals = 50'000;
};

using RealIntegrand = std::function<double(double)>;
using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Globally adaptive Gauss-Kronrod 7/15 on each piece of `breakpoints`
/// (sorted; the integral runs from the first to the last entry).
QuadratureResult integrate(const RealIntegrand& f, const std::vector<double>& breakpoints,
                           const QuadratureOptions& options = {});
QuadratureResult integrate(const RealIntegrand& f, double a, double b, const QuadratureOptions& options = {});
ComplexQuadratureResult integrate_complex(const ComplexIntegrand& f, const std::vector<double>& breakpoints,
                                          const QuadratureOptions& options = {});

/// Upper end of the log-substituted range used for [1, inf).
inline constexpr double kSemiInfiniteLogCutoff = 400.0;

/// Integral of f over (0, inf): adaptive rule on [0, 1], then t = e^u on
/// u in [0, kSemiInfiniteLogCutoff]. The tail beyond e^400 is not included.
QuadratureResult integrate_semi_infinite(const RealIntegrand& f, double tol);

/// Integrand |1-eta+it|^{2 eta} / (|-eta+it| |1+eta-it|) of the
/// zeta-line integral bounding the shifted-contour term.
double upsilon_integrand(double eta, double t);

/// Integral of upsilon_integrand over t in (0, inf) for 0.01 <= eta <= 0.45.
/// The analytic tail bound beyond the substitution cutoff is folded into
/// est_error; throws NonConvergence if est_error exceeds 1e-6.
QuadratureResult upsilon_integral(double eta);

/// Published supremum of upsilon_integral over 0.01 <= eta <= 0.45.
inline constexpr double kUpsilonIntegralBound = 10.45243;

/// |int_0^U u^{-1/2} exp(-i u (log u - mu)) du|, computed after u = v^2 with
/// panels no wider than half an oscillation. value holds the modulus.
QuadratureResult satz204_probe(double upper, double mu, double tol = 1e-9);

/// The uniform bound on the probe integral that the tail estimates rely on.
inline constexpr double kSatz204Bound = 26.0;

struct ProbeRow {
  double upper = 0.0;
  double mu = 0.0;
  QuadratureResult result;
  bool below_bound = false;
};

/// satz204_probe over every (U, mu) pair, U-major.
std::vector<ProbeRow> satz204_sweep(const std::vector<double>& uppers, const std::vector<double>& mus,
                                   double tol = 1e-9);

}  // namespace idealcount
