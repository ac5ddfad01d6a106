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

#include "idealcount/field.hpp"
#include "idealcount/log_magnitude.hpp"

namespace idealcount {

/// Every named constant evaluated at one degree n >= 2.
struct ConstantRow {
  int n = 0;
  LogMagnitude lambda_S, lambda_K, a7, q1, a12, a13, q2, q3, q4, q5, q6, q7_upper, q8_upper;
  double v1 = 0.0;  // at eta = 0.45, N0 = min(n, 7)
  double v2 = 0.0;
  double v3 = 0.0;  // at N0 = min(n, 7)
  double alpha = 0.0;
  double xi1 = 0.0, xi2 = 0.0, xi3 = 0.0, xi4 = 0.0;  // at the split point s = 3n
};

LogMagnitude lambda_sunley(int n);
LogMagnitude lambda_K(int n);
LogMagnitude a7(int n);
LogMagnitude q1_log(int n);
double q1(int n);

/// Printed constant 9.98134 = (3/pi) 10.45243 used inside v1.
inline constexpr double kV1Constant = 9.98134;

double v1(double eta, int N0, int n);
double v2(int n);
double v3(int n, int N0);
/// Same with an explicit discriminant floor in place of delta0(N0).
double v1_at_disc(double eta, double abs_disc, int n);
double v3_at_disc(int n, double abs_disc);

LogMagnitude q2(int n);
LogMagnitude q3(int n);
LogMagnitude a12(int n);
LogMagnitude a13(int n);
LogMagnitude q4(int n);
LogMagnitude q5(int n);
LogMagnitude q6(int n);
/// (e / (2(n-1)))^{n-1}
double louboutin_alpha(int n);
/// Worst case |disc|^{1/2}/z <= (2n)^{-(n-1)/(n+1)}.
LogMagnitude q7_upper(int n);
/// Same term with z = |disc|^{1/(n+1)} x^{(n-1)/(n+1)} for a concrete field and x.
LogMagnitude q7_at(int n, double abs_disc, double x);
LogMagnitude q8_upper(int n);

/// Memoized; safe to call from several threads.
const ConstantRow& constant_row(int n);

/// (e log|disc| / (2(n-1)))^{n-1}
double kappa_upper(int n, double log_abs_disc);
double zeta0_upper(const FieldSpec& field);

/// 3 |(1+s)/(1-s)| (|disc| (|1+s|/2pi)^n)^{(1+eta-sigma)/2} zeta(1+eta)^n, s = sigma + it.
double rademacher_rhs(double sigma, double t, double eta, const FieldSpec& field);

enum class BoundKind { sunley, improved };

/// Lambda |disc|^{1/(n+1)} (log|disc|)^{n or n-1} x^{1-2/(n+1)}.
LogMagnitude thm_bound(const FieldSpec& field, double x, BoundKind which);

/// Three-case coefficient: 1 below 2, n C(n-1, [(n-1)/2]) up to |disc|, Q1 beyond.
double b_K(const FieldSpec& field, double x);
/// b_K(x) (log|disc|)^{n-1} x
double ik_upper(const FieldSpec& field, double x);

enum class PartialSumKind { below1, above1, log };

/// Right-hand sides bounding sum_{m<=x} tau_m m^{-theta} (below1, log) and
/// the tail sum_{m>x} tau_m m^{-theta} (above1).
double partial_sum_bound(const FieldSpec& field, double theta, double x, PartialSumKind which);

}  // namespace idealcount
