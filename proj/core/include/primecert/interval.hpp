// Copyright 2026 The primecert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace primecert {

/// Current working precision in bits for newly created intervals (per thread).
int working_precision();

/// Sets the working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

/// Closed interval [lo, hi] with MPFR endpoints.
///
/// Every operation rounds the lower endpoint toward -inf and the upper
/// endpoint toward +inf, so the exact real result of the same expression is
/// always contained in the returned interval.  Upper bounds on subtracted
/// quantities are `hi()`, lower bounds on positive quantities are `lo()`.
class Interval {
 public:
  Interval();
  Interval(long value);  // NOLINT(google-explicit-constructor)
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  /// Parses "123", "-1.5e-3", or a rational "1/150".  Throws std::invalid_argument.
  static Interval from_decimal(std::string_view text);
  static Interval from_rational(const mpq_class& q);
  static Interval from_integer(const mpz_class& z);
  static Interval from_double(double d);
  static Interval hull(const Interval& a, const Interval& b);
  static Interval pi();
  static Interval e();

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  int precision() const;

  double lo_double() const;
  double hi_double() const;
  double mid_double() const;
  /// Natural log of the midpoint as a double; usable for huge magnitudes.
  double log_mid() const;

  bool certainly_positive() const;
  bool certainly_negative() const;
  bool certainly_nonnegative() const;
  bool contains_zero() const;
  bool is_point() const;
  /// True if every point of *this is < every point of other.
  bool certainly_less(const Interval& other) const;

  /// Decimal rendering of the lower (resp. upper) endpoint with the given
  /// number of significant digits, rounded outward.
  std::string lower_string(int digits = 30) const;
  std::string upper_string(int digits = 30) const;
  /// As lower_string, keeping trailing zeros so exactly `digits` digits print.
  std::string lower_fixed(int digits) const;
  /// Relative width (hi-lo)/|mid| as a double; 0 for point intervals.
  double relative_width() const;

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);
  Interval operator-() const;

 private:
  friend Interval exp(const Interval&);
  friend Interval expm1(const Interval&);
  friend Interval log(const Interval&);
  friend Interval log1p(const Interval&);
  friend Interval sqrt(const Interval&);
  friend Interval pow(const Interval&, unsigned long);
  friend Interval min(const Interval&, const Interval&);
  friend Interval max(const Interval&, const Interval&);
  friend Interval lower_point(const Interval&);
  friend Interval upper_point(const Interval&);

  mpfr_t lo_;
  mpfr_t hi_;
};

Interval operator+(Interval a, const Interval& b);
Interval operator-(Interval a, const Interval& b);
Interval operator*(Interval a, const Interval& b);
Interval operator/(Interval a, const Interval& b);

Interval exp(const Interval& x);
Interval expm1(const Interval& x);
/// Requires x.lo > 0.
Interval log(const Interval& x);
/// Requires x.lo > -1.
Interval log1p(const Interval& x);
/// Requires x.lo >= 0.
Interval sqrt(const Interval& x);
Interval pow(const Interval& x, unsigned long n);
/// x^y for x > 0, via exp(y log x).
Interval pow(const Interval& x, const Interval& y);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
/// Degenerate interval at the lower (upper) endpoint.
Interval lower_point(const Interval& x);
Interval upper_point(const Interval& x);

/// Formats an MPFR value in scientific notation, rounding in direction rnd.
std::string format_mpfr(mpfr_srcptr value, int digits, mpfr_rnd_t rnd, bool trim_zeros = true);

}  // namespace primecert
