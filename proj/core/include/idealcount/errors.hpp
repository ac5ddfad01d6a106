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

#include <stdexcept>
#include <string>

namespace idealcount {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised by every constant evaluator for n < 2.
class DegreeTooSmall : public DomainError {
 public:
  explicit DegreeTooSmall(int n)
      : DomainError("degree " + std::to_string(n) + " is below the minimum of 2"), degree_(n) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

class BadEta : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivideByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Opposite-sign addition lost more than the permitted number of decimal digits.
class CancellationWarning : public Error {
 public:
  CancellationWarning(const std::string& what, double lost_digits)
      : Error(what), lost_digits_(lost_digits) {}
  double lost_digits() const noexcept { return lost_digits_; }

 private:
  double lost_digits_;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A FieldSpec rule failed; rule() names it (e.g. "degree == r1 + 2*r2").
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string rule, const std::string& detail)
      : Error("invariant violated: " + rule + (detail.empty() ? "" : " (" + detail + ")")),
        rule_(std::move(rule)) {}
  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

class DiscTooSmall : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class NotFundamental : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedDiscriminant : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A prime divides the index [O_K : Z[theta]], so Dedekind's criterion cannot certify it.
class IndexDivisor : public Error {
 public:
  IndexDivisor(const std::string& what, long long prime) : Error(what), prime_(prime) {}
  long long prime() const noexcept { return prime_; }

 private:
  long long prime_;
};

class TableTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace idealcount
