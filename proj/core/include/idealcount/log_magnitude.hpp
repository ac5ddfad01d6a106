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

#include <cmath>
#include <string>

namespace idealcount {

/// A signed real stored as sign and natural log of its absolute value.
///
/// Used for every constant whose magnitude can leave binary64 range
/// (values such as 1E+252 appear routinely once n reaches 75).
/// A zero sign represents exactly zero and the stored log is ignored.
///
/// The log is kept as an unevaluated sum hi + lo (double-double) so that
/// converting back to binary64 does not lose |ln x| * eps of relative
/// accuracy; ln_abs() returns the rounded sum.
class LogMagnitude {
 public:
  constexpr LogMagnitude() noexcept = default;

  static LogMagnitude zero() noexcept { return {}; }
  static LogMagnitude one() noexcept { return from_log(0.0); }
  /// exp(ln_abs) with the given sign.
  static LogMagnitude from_log(double ln_abs, int sign = 1) noexcept;
  static LogMagnitude from_double(double value) noexcept;

  int sign() const noexcept { return sign_; }
  double ln_abs() const noexcept { return ln_abs_ + ln_lo_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  /// Converts back to binary64; saturates to +/-inf or flushes to zero outside range.
  double to_double() const noexcept;
  double log10_abs() const noexcept { return ln_abs() / std::log(10.0); }

  LogMagnitude operator-() const noexcept;
  LogMagnitude& operator*=(const LogMagnitude& rhs) noexcept;
  /// Throws DivideByZero when rhs is zero.
  LogMagnitude& operator/=(const LogMagnitude& rhs);
  /// Log-sum-exp anchored at the larger magnitude; silent about cancellation.
  LogMagnitude& operator+=(const LogMagnitude& rhs) noexcept;
  LogMagnitude& operator-=(const LogMagnitude& rhs) noexcept { return *this += -rhs; }

  /// |x|^p carrying the sign only for odd integral p; negative base with
  /// non-integral exponent throws DomainError.
  LogMagnitude pow(double exponent) const;

  /// Scientific rendering with `digits` significant digits, e.g. "1.75425E+30".
  std::string to_scientific(int digits = 6) const;

 private:
  static LogMagnitude from_parts(double hi, double lo, int sign) noexcept;

  int sign_ = 0;
  double ln_abs_ = 0.0;  // high part
  double ln_lo_ = 0.0;   // low part, |ln_lo_| <= ulp(ln_abs_) / 2

  friend bool operator<(const LogMagnitude& a, const LogMagnitude& b) noexcept;
  friend double relative_difference(const LogMagnitude& a, const LogMagnitude& b) noexcept;
};

inline LogMagnitude operator*(LogMagnitude a, const LogMagnitude& b) noexcept { return a *= b; }
inline LogMagnitude operator/(LogMagnitude a, const LogMagnitude& b) { return a /= b; }
inline LogMagnitude operator+(LogMagnitude a, const LogMagnitude& b) noexcept { return a += b; }
inline LogMagnitude operator-(LogMagnitude a, const LogMagnitude& b) noexcept { return a -= b; }

/// Addition that throws CancellationWarning when more than `max_lost_digits`
/// decimal digits cancel (default 6).
LogMagnitude add_checked(const LogMagnitude& a, const LogMagnitude& b, double max_lost_digits = 6.0);

/// Decimal digits lost when adding a and b (0 for like signs).
double cancellation_digits(const LogMagnitude& a, const LogMagnitude& b) noexcept;

bool operator<(const LogMagnitude& a, const LogMagnitude& b) noexcept;
inline bool operator>(const LogMagnitude& a, const LogMagnitude& b) noexcept { return b < a; }
inline bool operator<=(const LogMagnitude& a, const LogMagnitude& b) noexcept { return !(b < a); }
inline bool operator>=(const LogMagnitude& a, const LogMagnitude& b) noexcept { return !(a < b); }

/// |a/b - 1| computed in log space; both arguments must be non-zero and share a sign.
double relative_difference(const LogMagnitude& a, const LogMagnitude& b) noexcept;

enum class LogOp { mul, div, pow_by_real, add };

/// Dispatching form of the arithmetic above. For pow_by_real the exponent is
/// b.to_double(); add goes through add_checked.
LogMagnitude logmag_arith(const LogMagnitude& a, const LogMagnitude& b, LogOp op);

/// Parses "1.75425E+30"-style literals, including exponents beyond binary64 range.
LogMagnitude parse_scientific(const std::string& text);

}  // namespace idealcount
