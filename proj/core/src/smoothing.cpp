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

#include "primecert/smoothing.hpp"

#include <string>
#include <vector>

#include "primecert/errors.hpp"

namespace primecert {
namespace {

mpz_class factorial(unsigned long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class ipow(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

mpq_class qpow(const mpq_class& q, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

Interval delta_checked(const Interval& delta) {
  if (!delta.certainly_positive() || Interval::from_decimal("1e-6").certainly_less(delta)) {
    throw DomainError("delta must satisfy 0 < delta <= 1e-6");
  }
  return delta;
}

}  // namespace

WeightSpec::WeightSpec(int m, int n) : m_(m), n_(n) {
  if (m < 2) throw DomainError("weight: m must be an integer >= 2 (got " + std::to_string(m) + ")");
  if (n < 1) throw DomainError("weight: n must be an integer >= 1 (got " + std::to_string(n) + ")");
  if (m % 2 == 1 && n % 2 == 0) {
    throw DomainError("weight: n must be odd when m is odd (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  const auto un = static_cast<unsigned long>(n);
  A_ = mpq_class(ipow(un + 1, un + 1), ipow(un, un));
  A_.canonicalize();
}

const char* to_string(NormMode mode) { return mode == NormMode::exact ? "exact" : "published"; }

NormMode parse_norm_mode(const std::string& text) {
  if (text == "exact") return NormMode::exact;
  if (text == "published") return NormMode::published;
  throw DomainError("unknown norm mode '" + text + "' (expected exact or published)");
}

mpq_class norm1_exact(int m_in, int n_in) {
  if (m_in < 1 || n_in < 1) throw DomainError("norm1: m and n must be positive");
  const auto m = static_cast<unsigned long>(m_in);
  const auto n = static_cast<unsigned long>(n_in);
  const auto mn = m * n;
  mpq_class A(ipow(n + 1, n + 1), ipow(n, n));
  A.canonicalize();
  mpq_class r(factorial(m) * factorial(mn), factorial(mn + m + 1));
  r.canonicalize();
  return qpow(A, m) * r;
}

mpq_class norm1_exact(const WeightSpec& w) { return norm1_exact(w.m(), w.n()); }

Interval norm1(const WeightSpec& w) { return Interval::from_rational(norm1_exact(w)); }

mpq_class norm2_squared_exact(const WeightSpec& w) {
  const auto m = static_cast<unsigned long>(w.m());
  const auto mn = m * static_cast<unsigned long>(w.n());
  // f^(m) = A^m sum_j c_j t^(mn + j - m)
  std::vector<mpz_class> c(m + 1);
  for (unsigned long j = 0; j <= m; ++j) {
    mpz_class falling = factorial(mn + j) / factorial(mn + j - m);
    c[j] = binomial(m, j) * falling * ((j % 2) ? -1 : 1);
  }
  mpq_class sum(0);
  for (unsigned long i = 0; i <= m; ++i) {
    for (unsigned long j = 0; j <= m; ++j) {
      mpq_class term(c[i] * c[j], mpz_class(2 * mn + i + j - 2 * m + 1));
      term.canonicalize();
      sum += term;
    }
  }
  return qpow(w.A(), 2 * m) * sum;
}

Interval norm2_mth_derivative(const WeightSpec& w) { return sqrt(Interval::from_rational(norm2_squared_exact(w))); }

mpq_class norm2_squared_published(const WeightSpec& w) {
  const auto m = static_cast<unsigned long>(w.m());
  const auto mn = m * static_cast<unsigned long>(w.n());
  mpq_class sum(0);
  for (unsigned long k = 0; k <= m; ++k) {
    mpq_class term(binomial(m, k) * factorial(mn + k), factorial(2 * mn - m + k + 1));
    term.canonicalize();
    if ((mn + m + k) % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  mpq_class r = qpow(w.A(), 2 * m) * mpq_class(factorial(mn + m)) * sum;
  if (r < 0) {
    throw DomainError("published ||f^(m)||_2 closed form has a negative radicand (m=" + std::to_string(w.m()) +
                      ", n=" + std::to_string(w.n()) + ")");
  }
  return r;
}

Interval norm2_mth_derivative_published(const WeightSpec& w) {
  return sqrt(Interval::from_rational(norm2_squared_published(w)));
}

Interval nu(const WeightSpec& w, const Interval& a_in) {
  if (!a_in.certainly_nonnegative() || (Interval(1) / Interval(2)).certainly_less(a_in)) {
    throw DomainError("nu: a must lie in [0, 1/2]");
  }
  const int outer = working_precision();
  Interval result;
  {
    // The near-1 expansion is an alternating sum; guard bits absorb the cancellation.
    PrecisionScope scope(outer + 128);
    Interval a = a_in;
    const auto m = static_cast<unsigned long>(w.m());
    const auto mn = m * static_cast<unsigned long>(w.n());
    Interval log1m_a = log1p(-a);
    Interval near0(0);
    Interval near1(0);
    for (unsigned long j = 0; j <= m; ++j) {
      Interval coef = Interval::from_integer(binomial(m, j));
      if (j % 2) coef = -coef;
      const unsigned long K = mn + j + 1;
      Interval Ki = Interval::from_integer(mpz_class(K));
      // int_0^a t^(mn+j) dt
      near0 += coef * pow(a, K) / Ki;
      // int_{1-a}^1 t^(mn+j) dt = (1 - (1-a)^K) / K
      near1 += coef * (-expm1(Ki * log1m_a)) / Ki;
    }
    result = Interval::from_rational(qpow(w.A(), m)) * (near0 + near1);
    result = max(result, Interval(0));
  }
  return result;
}

Interval mean_ratio(const WeightSpec& w, const Interval& delta) {
  if (!delta.certainly_nonnegative()) throw DomainError("mean_ratio: delta must be >= 0");
  const long mn = static_cast<long>(w.m()) * w.n();
  return Interval(1) + Interval(mn + 1) * delta / Interval(mn + w.m() + 2);
}

SmoothingKernel::SmoothingKernel(const WeightSpec& w, NormMode mode)
    : w_(w), mode_(mode), norm1_(norm1_exact(w)) {
  const auto m = static_cast<unsigned long>(w.m());
  const auto n = static_cast<unsigned long>(w.n());
  const auto mn = m * n;
  const mpq_class B = w.B();
  mpq_class gap = qpow(B, n) - qpow(B, n + 1);
  mpq_class ratio(factorial(mn + m + 1), factorial(m) * factorial(mn));
  ratio.canonicalize();
  lambda0_ = 2 * qpow(gap, m) * ratio;
  const mpq_class n2 = mode == NormMode::exact ? norm2_squared_exact(w) : norm2_squared_published(w);
  ratio_sq_ = n2 / (norm1_ * norm1_);
}

FBounds SmoothingKernel::bounds(const Interval& delta_in) const {
  const Interval delta = delta_checked(delta_in);
  const Interval one(1);
  FBounds b;
  b.F0_lower = one;
  b.F0_upper = one + delta;
  Interval l0 = Interval::from_rational(lambda0_);
  b.F1_lower = lower_point(l0);
  b.F1_upper = upper_point((one + delta) * (one + delta) * l0);
  const Interval k(2L * w_.m() + 3);
  Interval prefactor = expm1(k * log1p(delta)) / (delta * k);
  b.Fm_upper = upper_point(sqrt(prefactor * Interval::from_rational(ratio_sq_)));
  return b;
}

FBounds f_bounds(const WeightSpec& w, const Interval& delta, NormMode mode) {
  return SmoothingKernel(w, mode).bounds(delta);
}

}  // namespace primecert
