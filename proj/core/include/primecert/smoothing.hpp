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

#include <gmpxx.h>

#include <string>

#include "primecert/interval.hpp"

namespace primecert {

/// The smoothing weight f(t) = (A t^n (1-t))^m with A = (n+1)^(n+1) / n^n,
/// normalized so that max f = 1 on [0, 1].
class WeightSpec {
 public:
  /// Throws DomainError unless m >= 2, n >= 1, and n is odd whenever m is odd.
  WeightSpec(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  /// (n+1)^(n+1) / n^n, exact.
  const mpq_class& A() const { return A_; }
  /// n/(n+1), the maximizer of t^n (1-t).
  mpq_class B() const { return mpq_class(n_, n_ + 1); }

 private:
  int m_;
  int n_;
  mpq_class A_;
};

/// How ||f^(m)||_2 enters the F(m,m,delta) bound.
enum class NormMode {
  exact,      // true L2 norm of the m-th derivative
  published,  // alternating factorial sum; equals the true norm only for n in {1, 3}
};

const char* to_string(NormMode mode);
NormMode parse_norm_mode(const std::string& text);

/// ||f||_1 = A^m m! (mn)! / (mn+m+1)!, exact.
mpq_class norm1_exact(const WeightSpec& w);
/// Same closed form for any m, n >= 1 (no parity requirement).
mpq_class norm1_exact(int m, int n);
Interval norm1(const WeightSpec& w);

/// ||f^(m)||_2^2 computed exactly from the polynomial coefficients of f^(m).
mpq_class norm2_squared_exact(const WeightSpec& w);
Interval norm2_mth_derivative(const WeightSpec& w);

/// The alternating factorial-sum closed form
///   A^{2m} (mn+m)! sum_k (-1)^{mn+m+k} C(m,k) (mn+k)! / (2mn-m+k+1)!.
/// Throws DomainError if the radicand is negative.
mpq_class norm2_squared_published(const WeightSpec& w);
Interval norm2_mth_derivative_published(const WeightSpec& w);

/// nu(f, a) = int_0^a f + int_{1-a}^1 f for 0 <= a <= 1/2, as an enclosure.
Interval nu(const WeightSpec& w, const Interval& a);

/// int_0^1 (1 + delta t) f / ||f||_1 = 1 + (mn+1) delta / (mn+m+2).
Interval mean_ratio(const WeightSpec& w, const Interval& delta);

/// Bounds on F(k, m, delta) for k = 0, 1, m.
struct FBounds {
  Interval F0_lower;  // 1
  Interval F0_upper;  // 1 + delta
  Interval F1_lower;  // lambda_0
  Interval F1_upper;  // lambda_1 = (1+delta)^2 lambda_0
  Interval Fm_upper;  // lambda
};

/// Exact rational ingredients of FBounds that depend only on (m, n).
class SmoothingKernel {
 public:
  SmoothingKernel(const WeightSpec& w, NormMode mode);

  const WeightSpec& weight() const { return w_; }
  NormMode mode() const { return mode_; }
  const mpq_class& norm1() const { return norm1_; }
  /// 2 (B^n - B^(n+1))^m (mn+m+1)! / (m! (mn)!) = ||f'||_1 / ||f||_1.
  const mpq_class& lambda0() const { return lambda0_; }
  /// ||f^(m)||_2^2 / ||f||_1^2 in the chosen mode.
  const mpq_class& derivative_ratio_squared() const { return ratio_sq_; }

  /// Throws DomainError unless 0 < delta <= 1e-6.
  FBounds bounds(const Interval& delta) const;

 private:
  WeightSpec w_;
  NormMode mode_;
  mpq_class norm1_;
  mpq_class lambda0_;
  mpq_class ratio_sq_;
};

FBounds f_bounds(const WeightSpec& w, const Interval& delta, NormMode mode = NormMode::exact);

}  // namespace primecert
