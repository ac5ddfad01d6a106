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

#include "idealcount/log_magnitude.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "idealcount/errors.hpp"

namespace idealcount {

namespace {

// Knuth's error-free sum: s + e == a + b exactly.
void two_sum(double a, double b, double& s, double& e) noexcept {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

}  // namespace

LogMagnitude LogMagnitude::from_parts(double hi, double lo, int sign) noexcept {
  LogMagnitude m;
  if (sign == 0 || hi == -std::numeric_limits<double>::infinity()) return m;
  m.sign_ = sign > 0 ? 1 : -1;
  if (!std::isfinite(hi) || !std::isfinite(lo)) {
    m.ln_abs_ = hi + lo;
    return m;
  }
  m.ln_abs_ = hi + lo;
  m.ln_lo_ = lo - (m.ln_abs_ - hi);
  return m;
}

LogMagnitude LogMagnitude::from_log(double ln_abs, int sign) noexcept { return from_parts(ln_abs, 0.0, sign); }

LogMagnitude LogMagnitude::from_double(double value) noexcept {
  if (value == 0.0) return {};
  const double a = std::fabs(value);
  const int sign = value > 0 ? 1 : -1;
  const double hi = std::log(a);
  // The correction is taken against the same exp() that to_double() uses,
  // so the round trip is accurate to a couple of ulp whatever the size of hi.
  const double e = std::exp(hi);
  if (!std::isnormal(e) || !std::isfinite(a)) return from_log(hi, sign);
  return from_parts(hi, (a - e) / e, sign);
}

double LogMagnitude::to_double() const noexcept {
  if (sign_ == 0) return 0.0;
  const double e = std::exp(ln_abs_);
  if (ln_lo_ == 0.0 || !std::isfinite(e)) return sign_ * e;
  return sign_ * std::fma(e, ln_lo_, e);
}

LogMagnitude LogMagnitude::operator-() const noexcept {
  LogMagnitude m = *this;
  m.sign_ = -m.sign_;
  return m;
}

LogMagnitude& LogMagnitude::operator*=(const LogMagnitude& rhs) noexcept {
  if (sign_ == 0 || rhs.sign_ == 0) {
    *this = {};
    return *this;
  }
  double s, e;
  two_sum(ln_abs_, rhs.ln_abs_, s, e);
  *this = from_parts(s, e + ln_lo_ + rhs.ln_lo_, sign_ * rhs.sign_);
  return *this;
}

LogMagnitude& LogMagnitude::operator/=(const LogMagnitude& rhs) {
  if (rhs.sign_ == 0) throw DivideByZero("LogMagnitude division by zero");
  if (sign_ == 0) return *this;
  double s, e;
  two_sum(ln_abs_, -rhs.ln_abs_, s, e);
  *this = from_parts(s, e + ln_lo_ - rhs.ln_lo_, sign_ * rhs.sign_);
  return *this;
}

LogMagnitude& LogMagnitude::operator+=(const LogMagnitude& rhs) noexcept {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = rhs;
    return *this;
  }
  const bool self_larger = ln_abs_ != rhs.ln_abs_ ? ln_abs_ > rhs.ln_abs_ : ln_lo_ >= rhs.ln_lo_;
  const LogMagnitude big = self_larger ? *this : rhs;
  const LogMagnitude small = self_larger ? rhs : *this;
  // ratio = |small| / |big| in [0, 1]
  const double ratio = std::exp((small.ln_abs_ - big.ln_abs_) + (small.ln_lo_ - big.ln_lo_));
  if (big.sign_ != small.sign_ && ratio == 1.0) {
    *this = {};
    return *this;
  }
  const double t = big.sign_ == small.sign_ ? std::log1p(ratio) : std::log1p(-ratio);
  double s, e;
  two_sum(big.ln_abs_, t, s, e);
  *this = from_parts(s, e + big.ln_lo_, big.sign_);
  return *this;
}

LogMagnitude LogMagnitude::pow(double exponent) const {
  if (sign_ == 0) {
    if (exponent > 0) return {};
    if (exponent == 0) return one();
    throw DivideByZero("zero raised to a negative power");
  }
  int sign = 1;
  if (sign_ < 0) {
    if (exponent != std::floor(exponent)) throw DomainError("negative base with non-integral exponent");
    if (std::fmod(std::fabs(exponent), 2.0) == 1.0) sign = -1;
  }
  const double hi = ln_abs_ * exponent;
  const double err = std::fma(ln_abs_, exponent, -hi);
  return from_parts(hi, err + ln_lo_ * exponent, sign);
}

std::string LogMagnitude::to_scientific(int digits) const {
  digits = std::clamp(digits, 1, 30);
  char buf[64];
  if (sign_ == 0) {
    std::snprintf(buf, sizeof buf, "%.*E", digits - 1, 0.0);
    return buf;
  }
  if (std::isnan(ln_abs_)) return "nan";
  if (std::isinf(ln_abs_)) {
    if (ln_abs_ > 0) return sign_ < 0 ? "-inf" : "inf";
    std::snprintf(buf, sizeof buf, "%.*E", digits - 1, 0.0);
    return buf;
  }
  // Inside binary64 range defer to printf, which rounds the exact binary
  // value half-to-even.
  if (std::fabs(ln_abs_) < 700.0) {
    std::snprintf(buf, sizeof buf, "%.*E", digits - 1, to_double());
    return buf;
  }
  const double l10 = ln_abs_ / std::log(10.0);
  long long exponent = static_cast<long long>(std::floor(l10));
  double mantissa = std::pow(10.0, l10 - static_cast<double>(exponent));
  std::snprintf(buf, sizeof buf, "%.*f", digits - 1, mantissa);
  if (std::strtod(buf, nullptr) >= 10.0) {
    ++exponent;
    mantissa /= 10.0;
    std::snprintf(buf, sizeof buf, "%.*f", digits - 1, mantissa);
  }
  std::string out = sign_ < 0 ? "-" : "";
  out += buf;
  char ebuf[32];
  std::snprintf(ebuf, sizeof ebuf, "E%c%02lld", exponent < 0 ? '-' : '+', exponent < 0 ? -exponent : exponent);
  return out + ebuf;
}

double cancellation_digits(const LogMagnitude& a, const LogMagnitude& b) noexcept {
  if (a.is_zero() || b.is_zero() || a.sign() == b.sign()) return 0.0;
  const double hi = std::max(a.ln_abs(), b.ln_abs());
  const double ratio = std::exp(std::min(a.ln_abs(), b.ln_abs()) - hi);
  if (ratio == 1.0) return std::numeric_limits<double>::infinity();
  // |a+b| / max(|a|,|b|) = 1 - ratio
  return -std::log10(1.0 - ratio);
}

LogMagnitude add_checked(const LogMagnitude& a, const LogMagnitude& b, double max_lost_digits) {
  const double lost = cancellation_digits(a, b);
  if (lost > max_lost_digits) {
    throw CancellationWarning("log-space addition lost " + std::to_string(lost) + " decimal digits", lost);
  }
  return a + b;
}

bool operator<(const LogMagnitude& a, const LogMagnitude& b) noexcept {
  if (a.sign() != b.sign()) return a.sign() < b.sign();
  if (a.sign() == 0) return false;
  // |a| < |b| on the normalised (hi, lo) pairs
  const bool mag_less = a.ln_abs_ != b.ln_abs_ ? a.ln_abs_ < b.ln_abs_ : a.ln_lo_ < b.ln_lo_;
  const bool mag_equal = a.ln_abs_ == b.ln_abs_ && a.ln_lo_ == b.ln_lo_;
  return a.sign() > 0 ? mag_less : !mag_less && !mag_equal;
}

double relative_difference(const LogMagnitude& a, const LogMagnitude& b) noexcept {
  if (a.is_zero() || b.is_zero() || a.sign() != b.sign()) return std::numeric_limits<double>::infinity();
  return std::fabs(std::expm1((a.ln_abs_ - b.ln_abs_) + (a.ln_lo_ - b.ln_lo_)));
}

LogMagnitude logmag_arith(const LogMagnitude& a, const LogMagnitude& b, LogOp op) {
  switch (op) {
    case LogOp::mul:
      return a * b;
    case LogOp::div:
      return a / b;
    case LogOp::pow_by_real:
      return a.pow(b.to_double());
    case LogOp::add:
      return add_checked(a, b);
  }
  throw DomainError("unknown LogOp");
}

LogMagnitude parse_scientific(const std::string& text) {
  const auto epos = text.find_first_of("eE");
  const std::string mant_str = text.substr(0, epos);
  char* end = nullptr;
  const double mantissa = std::strtod(mant_str.c_str(), &end);
  if (end == mant_str.c_str() || *end != '\0') throw ParseError("bad scientific literal: " + text);
  long long exponent = 0;
  if (epos != std::string::npos) {
    const std::string exp_str = text.substr(epos + 1);
    exponent = std::strtoll(exp_str.c_str(), &end, 10);
    if (exp_str.empty() || *end != '\0') throw ParseError("bad scientific literal: " + text);
  }
  if (mantissa == 0.0) return {};
  return LogMagnitude::from_log(std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(10.0),
                                mantissa > 0 ? 1 : -1);
}

}  // namespace idealcount
