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

#include "primecert/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace primecert {
namespace {

thread_local int g_precision = 256;

void init(mpfr_t x) { mpfr_init2(x, g_precision); }

// Parses a plain decimal (no '/') into x with the given rounding.
void parse_decimal(mpfr_t x, const std::string& text, mpfr_rnd_t rnd) {
  if (text.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  mpfr_strtofr(x, text.c_str(), &end, 10, rnd);
  if (end == text.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
  if (!mpfr_number_p(x)) throw std::invalid_argument("non-finite number: '" + text + "'");
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

int working_precision() { return g_precision; }

PrecisionScope::PrecisionScope(int bits) : saved_(g_precision) {
  if (bits < MPFR_PREC_MIN || bits > 1 << 20) {
    throw std::invalid_argument("precision out of range: " + std::to_string(bits));
  }
  g_precision = bits;
}

PrecisionScope::~PrecisionScope() { g_precision = saved_; }

Interval::Interval() {
  init(lo_);
  init(hi_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value) {
  init(lo_);
  init(hi_);
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval() {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_decimal(std::string_view raw) {
  std::string text = trim(raw);
  Interval r;
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    parse_decimal(r.lo_, text, MPFR_RNDD);
    parse_decimal(r.hi_, text, MPFR_RNDU);
    return r;
  }
  Interval num = from_decimal(text.substr(0, slash));
  Interval den = from_decimal(text.substr(slash + 1));
  return num / den;
}

Interval Interval::from_rational(const mpq_class& q) {
  Interval r;
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_integer(const mpz_class& z) {
  Interval r;
  mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_double(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("non-finite double");
  Interval r;
  mpfr_set_d(r.lo_, d, MPFR_RNDD);
  mpfr_set_d(r.hi_, d, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pi() {
  Interval r;
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::e() { return exp(Interval(1)); }

int Interval::precision() const { return static_cast<int>(mpfr_get_prec(lo_)); }

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, mpfr_get_prec(lo_) + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

double Interval::log_mid() const {
  mpfr_t m;
  mpfr_init2(m, mpfr_get_prec(lo_) + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  if (mpfr_sgn(m) <= 0) {
    mpfr_clear(m);
    return -HUGE_VAL;
  }
  mpfr_log(m, m, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }
bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
bool Interval::certainly_less(const Interval& other) const { return mpfr_less_p(hi_, other.lo_) != 0; }

std::string Interval::lower_string(int digits) const { return format_mpfr(lo_, digits, MPFR_RNDD); }
std::string Interval::upper_string(int digits) const { return format_mpfr(hi_, digits, MPFR_RNDU); }
std::string Interval::lower_fixed(int digits) const { return format_mpfr(lo_, digits, MPFR_RNDD, false); }

double Interval::relative_width() const {
  if (is_point()) return 0.0;
  mpfr_t w, m;
  mpfr_init2(w, 64);
  mpfr_init2(m, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  mpfr_abs(m, m, MPFR_RNDN);
  double r = mpfr_zero_p(m) ? HUGE_VAL : mpfr_get_d(w, MPFR_RNDU) / mpfr_get_d(m, MPFR_RNDN);
  if (!mpfr_zero_p(m) && (r == 0.0 || !std::isfinite(r))) {
    mpfr_div(w, w, m, MPFR_RNDU);
    r = mpfr_get_d(w, MPFR_RNDU);
  }
  mpfr_clear(w);
  mpfr_clear(m);
  return r;
}

Interval& Interval::operator+=(const Interval& rhs) {
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  // rhs.hi is read before hi_ is written, so aliasing with *this is safe.
  Interval r(rhs);
  mpfr_sub(lo_, lo_, r.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, r.lo_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
  const bool a_nonneg = mpfr_sgn(lo_) >= 0;
  const bool b_nonneg = mpfr_sgn(rhs.lo_) >= 0;
  if (a_nonneg && b_nonneg) {
    Interval r(rhs);
    mpfr_mul(lo_, lo_, r.lo_, MPFR_RNDD);
    mpfr_mul(hi_, hi_, r.hi_, MPFR_RNDU);
    return *this;
  }
  Interval out;
  mpfr_t t;
  mpfr_init2(t, g_precision);
  mpfr_set_inf(out.lo_, 1);
  mpfr_set_inf(out.hi_, -1);
  for (mpfr_srcptr x : {lo_, hi_}) {
    for (mpfr_srcptr y : {rhs.lo_, rhs.hi_}) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
    }
  }
  mpfr_clear(t);
  *this = std::move(out);
  return *this;
}

Interval& Interval::operator/=(const Interval& rhs) {
  if (rhs.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  Interval inv;
  mpfr_ui_div(inv.lo_, 1, rhs.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, rhs.lo_, MPFR_RNDU);
  return *this *= inv;
}

Interval Interval::operator-() const {
  Interval r;
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(Interval a, const Interval& b) { return a += b; }
Interval operator-(Interval a, const Interval& b) { return a -= b; }
Interval operator*(Interval a, const Interval& b) { return a *= b; }
Interval operator/(Interval a, const Interval& b) { return a /= b; }

Interval exp(const Interval& x) {
  Interval r;
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval expm1(const Interval& x) {
  Interval r;
  mpfr_expm1(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_expm1(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw std::domain_error("log of a non-positive interval");
  Interval r;
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval log1p(const Interval& x) {
  if (mpfr_cmp_si(x.lo_, -1) <= 0) throw std::domain_error("log1p argument <= -1");
  Interval r;
  mpfr_log1p(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log1p(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo_) < 0) throw std::domain_error("sqrt of a negative interval");
  Interval r;
  mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval pow(const Interval& x, unsigned long n) {
  if (n == 0) return Interval(1);
  if (mpfr_sgn(x.lo_) >= 0) {
    Interval r;
    mpfr_pow_ui(r.lo_, x.lo_, n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, x.hi_, n, MPFR_RNDU);
    return r;
  }
  Interval r(1);
  for (unsigned long i = 0; i < n; ++i) r *= x;
  return r;
}

Interval pow(const Interval& x, const Interval& y) { return exp(y * log(x)); }

Interval min(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval lower_point(const Interval& x) {
  Interval r;
  mpfr_set(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_set(r.hi_, x.lo_, MPFR_RNDU);
  return r;
}

Interval upper_point(const Interval& x) {
  Interval r;
  mpfr_set(r.lo_, x.hi_, MPFR_RNDD);
  mpfr_set(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

std::string format_mpfr(mpfr_srcptr value, int digits, mpfr_rnd_t rnd, bool trim_zeros) {
  if (mpfr_zero_p(value)) return "0";
  if (mpfr_inf_p(value)) return mpfr_sgn(value) > 0 ? "inf" : "-inf";
  if (mpfr_nan_p(value)) return "nan";
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(digits), value, rnd);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // mantissa is 0.d1d2d3... * 10^exponent
  std::string out = sign + mant.substr(0, 1);
  std::string rest = mant.substr(1);
  while (trim_zeros && !rest.empty() && rest.back() == '0') rest.pop_back();
  if (!rest.empty()) out += "." + rest;
  long e10 = static_cast<long>(exponent) - 1;
  if (e10 != 0) out += "e" + std::to_string(e10);
  return out;
}

}  // namespace primecert
