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

#include <array>
#include <complex>

namespace idealcount {

/// Abscissae of the two shifted contours.
double mu_K(int n);  // -1/2 - 1/(2n)
double nu_K(int n);  //  1/2 - 1/(2n)

/// (1/(1+z))^{r1+r2} (1/(1-z))^{r2} - 1 with z = exp(-pi t + pi sigma i).
std::complex<double> alpha_exact(int r1, int r2, double sigma, double t);

enum class UpsilonVariant { full, single };

/// full:   prod_{j=0}^{n} ui / (n(sigma+j) + ui) - 1
/// single: ui / (n sigma + ui) - 1
std::complex<double> upsilon_product_exact(int n, double sigma, double u, UpsilonVariant variant);

inline constexpr double kXi2Constant = 2.78955;
inline constexpr double kXi3Constant = 2.19580;

double xi1(int n);
/// Requires ell > 2.78955 n^2.
double xi2(int n, double ell);
/// Requires ell > 2.19580 n^2.
double xi3(int n, double ell);
double xi4(int n);

/// (n / 2t)(3 sigma^2 + |sigma| + pi)
double beta_bound(int n, double sigma, double t);
/// 5/8 + pi/2 + 1/n + 3/(8n^2), the sigma = mu_K bracket halved.
double beta_g(int n);
/// (3 nu^2 + |nu| + pi) / 2, increasing to 2.19580 as n grows.
double beta_g_nu(int n);

/// Default split s_I = s_J = 3 n^X with X = 1.
double split_point(int n, double X = 1.0);

struct SplitMinimums {
  double S_I;
  double S_J;
};
SplitMinimums split_point_minimums(int n);

enum class Side { I, J };

struct ComponentBounds {
  int n = 0;
  double s_split = 0.0;
  Side side = Side::I;
  std::array<double, 10> terms{};  // terms[k-1] bounds |I_k| (or |J_k|)
  double sum_4_10 = 0.0;
  double max_main = 0.0;   // max of the three non-erfc terms 4, 6, 8
  double aggregate = 0.0;  // term 1 + 26/sqrt(n) + 3 max_main
  double closed_form = 0.0;
  bool dominance_ok = false;   // sum_4_10 <= 3 max_main
  bool closed_form_ok = false; // aggregate <= closed_form
};

/// Bounds for the ten pieces of the lower (I) or upper (J) contour integral
/// with split point s (s >= 3n and s n > 2.78955 n^2). X only enters the
/// closed form 2^{n/2+2} e^{...} sqrt(3 n^X).
ComponentBounds component_bounds(int n, double s_split, Side side, double X = 1.0);

}  // namespace idealcount
