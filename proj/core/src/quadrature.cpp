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

#include "idealcount/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace idealcount {
namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Panel {
  double a;
  double b;
  T value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

double magnitude(double v) { return std::abs(v); }
double magnitude(const std::complex<double>& v) { return std::abs(v); }

// One 15-point Kronrod step with the QUADPACK error heuristic.
template <typename T, typename F>
Panel<T> gk15(const F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(centre);
  T kronrod = fc * kWgk[7];
  T gauss = fc * kWg[3];
  double resabs = magnitude(fc) * kWgk[7];
  std::array<T, 7> f1{};
  std::array<T, 7> f2{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(centre - dx);
    f2[j] = f(centre + dx);
    kronrod += (f1[j] + f2[j]) * kWgk[j];
    resabs += (magnitude(f1[j]) + magnitude(f2[j])) * kWgk[j];
    if (j % 2 == 1) gauss += (f1[j] + f2[j]) * kWg[j / 2];
  }
  const T mean = kronrod * 0.5;
  double resasc = kWgk[7] * magnitude(fc - mean);
  for (std::size_t j = 0; j < 7; ++j) resasc += kWgk[j] * (magnitude(f1[j] - mean) + magnitude(f2[j] - mean));

  const double scale = std::abs(half);
  double err = magnitude(kronrod - gauss) * scale;
  resasc *= scale;
  resabs *= scale;
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  return {a, b, kronrod * half, err};
}

template <typename T, typename F>
std::pair<T, double> adaptive(const F& f, const std::vector<double>& breakpoints, const QuadratureOptions& opt,
                              std::size_t& evaluations) {
  if (breakpoints.size() < 2) throw DomainError("integrate: need at least two breakpoints");
  if (!(opt.abs_tol > 0.0)) throw DomainError("integrate: tolerance must be positive");
  std::priority_queue<Panel<T>> queue;
  T total{};
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] <= breakpoints[i + 1])) throw DomainError("integrate: breakpoints must be increasing");
    if (breakpoints[i] == breakpoints[i + 1]) continue;
    Panel<T> p = gk15<T>(f, breakpoints[i], breakpoints[i + 1]);
    evaluations += 15;
    total += p.value;
    error += p.error;
    queue.push(p);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  while (error > opt.abs_tol && !queue.empty() && queue.size() < opt.max_intervals) {
    Panel<T> worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (worst.b - worst.a <= 8.0 * eps * std::max(std::abs(worst.a), std::abs(worst.b)) ||
        worst.b - worst.a < std::numeric_limits<double>::min())
      break;
    queue.pop();
    Panel<T> left = gk15<T>(f, worst.a, mid);
    Panel<T> right = gk15<T>(f, mid, worst.b);
    evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  // Re-sum to shed drift accumulated by the incremental updates.
  T resum{};
  double err_sum = 0.0;
  while (!queue.empty()) {
    resum += queue.top().value;
    err_sum += queue.top().error;
    queue.pop();
  }
  return {resum, err_sum};
}

}  // namespace

QuadratureResult integrate(const RealIntegrand& f, const std::vector<double>& breakpoints,
                           const QuadratureOptions& options) {
  QuadratureResult r;
  auto [value, error] = adaptive<double>(f, breakpoints, options, r.evaluations);
  r.value = value;
  r.est_error = error;
  if (!std::isfinite(r.value) || r.est_error > options.abs_tol)
    throw NonConvergence("integrate: error estimate above tolerance", r);
  return r;
}

QuadratureResult integrate(const RealIntegrand& f, double a, double b, const QuadratureOptions& options) {
  return integrate(f, std::vector<double>{a, b}, options);
}

ComplexQuadratureResult integrate_complex(const ComplexIntegrand& f, const std::vector<double>& breakpoints,
                                          const QuadratureOptions& options) {
  ComplexQuadratureResult r;
  auto [value, error] = adaptive<std::complex<double>>(f, breakpoints, options, r.evaluations);
  r.value = value;
  r.est_error = error;
  if (r.est_error > options.abs_tol)
    throw NonConvergence("integrate_complex: error estimate above tolerance",
                         QuadratureResult{std::abs(r.value), r.est_error, r.evaluations});
  return r;
}

QuadratureResult integrate_semi_infinite(const RealIntegrand& f, double tol) {
  if (!(tol > 0.0)) throw DomainError("integrate_semi_infinite: tolerance must be positive");
  // Both pieces share one adaptive queue: u-panels are mapped back through t = e^u.
  auto g = [&f](double x) {
    if (x <= 1.0) return f(x);
    const double u = x - 1.0;
    const double t = std::exp(u);
    const double v = f(t);
    return v == 0.0 ? 0.0 : v * t;
  };
  // x in [0,1] is t itself, x in [1, 1 + u_max] is u + 1. Seed with
  // geometric pieces in u so the initial rule sees the decay scale.
  std::vector<double> bp = {0.0, 0.5, 1.0};
  for (double u = 1.0; u < kSemiInfiniteLogCutoff; u *= 2.0) bp.push_back(1.0 + u);
  bp.push_back(1.0 + kSemiInfiniteLogCutoff);
  QuadratureOptions opt;
  opt.abs_tol = tol;
  return integrate(g, bp, opt);
}

double upsilon_integrand(double eta, double t) {
  const double num = std::hypot(1.0 - eta, t);
  const double d1 = std::hypot(eta, t);
  const double d2 = std::hypot(1.0 + eta, t);
  return std::exp(2.0 * eta * std::log(num) - std::log(d1) - std::log(d2));
}

QuadratureResult upsilon_integral(double eta) {
  if (!(eta >= 0.01 && eta <= 0.45)) throw BadEta("upsilon_integral: eta must lie in [0.01, 0.45]");
  QuadratureResult r = integrate_semi_infinite([eta](double t) { return upsilon_integrand(eta, t); }, 1e-10);
  // int_T^inf (1+t)^{2 eta} t^{-2} dt <= 2^{2 eta} T^{2 eta - 1} / (1 - 2 eta)
  const double tail = std::exp(2.0 * eta * std::numbers::ln2 + (2.0 * eta - 1.0) * kSemiInfiniteLogCutoff) /
                      (1.0 - 2.0 * eta);
  r.est_error += tail;
  if (r.est_error > 1e-6) throw NonConvergence("upsilon_integral: error estimate above 1e-6", r);
  return r;
}

QuadratureResult satz204_probe(double upper, double mu, double tol) {
  if (!(upper > 0.0) || !std::isfinite(upper)) throw DomainError("satz204_probe: U must be positive and finite");
  if (!std::isfinite(mu)) throw DomainError("satz204_probe: mu must be finite");
  // u = v^2: integrand 2 exp(-i v^2 (2 log v - mu)), phase derivative 2v(2 log v - mu + 1).
  const double vmax = std::sqrt(upper);
  auto f = [mu](double v) -> std::complex<double> {
    if (v == 0.0) return {2.0, 0.0};
    const double phase = -v * v * (2.0 * std::log(v) - mu);
    return {2.0 * std::cos(phase), 2.0 * std::sin(phase)};
  };
  std::vector<double> bp = {0.0};
  double v = 0.0;
  while (v < vmax) {
    const double slope = v > 0.0 ? std::abs(2.0 * v * (2.0 * std::log(v) - mu + 1.0)) : 0.0;
    const double step = std::min(0.25, 0.5 * std::numbers::pi / std::max(1.0, slope));
    v = std::min(vmax, v + step);
    bp.push_back(v);
    if (bp.size() > 5'000'000) throw NonConvergence("satz204_probe: U too large for panel budget", {});
  }
  QuadratureOptions opt;
  opt.abs_tol = tol;
  opt.max_intervals = bp.size() + 200'000;
  const ComplexQuadratureResult c = integrate_complex(f, bp, opt);
  return {std::abs(c.value), c.est_error, c.evaluations};
}

std::vector<ProbeRow> satz204_sweep(const std::vector<double>& uppers, const std::vector<double>& mus, double tol) {
  std::vector<ProbeRow> rows;
  for (double u : uppers)
    for (double mu : mus) {
      ProbeRow r;
      r.upper = u;
      r.mu = mu;
      r.result = satz204_probe(u, mu, tol);
      r.below_bound = r.result.value + r.result.est_error < kSatz204Bound;
      rows.push_back(r);
    }
  return rows;
}

}  // namespace idealcount
