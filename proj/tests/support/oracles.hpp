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

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <functional>
#include <string>
#include <vector>

#include "primecert/interval.hpp"

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;

inline Real from_interval(const primecert::Interval& x) { return Real(x.lower_string(45)); }

inline Real weight_A(int n) { return boost::multiprecision::pow(Real(n + 1), n + 1) / boost::multiprecision::pow(Real(n), n); }

/// f(t) = (A t^n (1-t))^m evaluated directly.
inline Real weight(int m, int n, const Real& t) {
  return boost::multiprecision::pow(weight_A(n) * boost::multiprecision::pow(t, n) * (1 - t), m);
}

/// Coefficients of f in the monomial basis, lowest degree first.
inline std::vector<Real> weight_poly(int m, int n) {
  std::vector<Real> p(static_cast<std::size_t>(m * n + m + 1), Real(0));
  Real Am = boost::multiprecision::pow(weight_A(n), m);
  Real binom = 1;
  for (int j = 0; j <= m; ++j) {
    p[static_cast<std::size_t>(m * n + j)] = Am * binom * ((j % 2) ? -1 : 1);
    binom = binom * (m - j) / (j + 1);
  }
  return p;
}

inline std::vector<Real> differentiate(std::vector<Real> p, int times) {
  for (int k = 0; k < times; ++k) {
    std::vector<Real> d(p.size() > 1 ? p.size() - 1 : 1, Real(0));
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<int>(i);
    p = std::move(d);
  }
  return p;
}

inline Real eval_poly(const std::vector<Real>& p, const Real& t) {
  Real acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

inline Real integrate(const std::function<Real(Real)>& f, const Real& a, const Real& b) {
  boost::math::quadrature::tanh_sinh<Real> ts(15);
  return ts.integrate(f, a, b, Real(1e-40));
}

/// Adaptive quadrature on [a, b] split at the interior point c.
inline Real integrate_split(const std::function<Real(Real)>& f, const Real& a, const Real& c, const Real& b) {
  return integrate(f, a, c) + integrate(f, c, b);
}

inline Real norm1(int m, int n) {
  Real B = Real(n) / (n + 1);
  return integrate_split([&](Real t) { return weight(m, n, t); }, 0, B, 1);
}

inline Real norm2_squared(int m, int n) {
  auto d = differentiate(weight_poly(m, n), m);
  Real B = Real(n) / (n + 1);
  auto sq = [&](Real t) {
    Real v = eval_poly(d, t);
    return v * v;
  };
  return integrate_split(sq, 0, B, 1);
}

inline Real nu(int m, int n, const Real& a) {
  if (a == 0) return 0;
  auto f = [&](Real t) { return weight(m, n, t); };
  return integrate(f, 0, a) + integrate(f, 1 - a, 1);
}

/// ||f'||_1 / ||f||_1 by quadrature of |f'| on either side of the maximum.
inline Real lambda0(int m, int n) {
  auto d = differentiate(weight_poly(m, n), 1);
  Real B = Real(n) / (n + 1);
  auto abs_d = [&](Real t) {
    Real v = eval_poly(d, t);
    return v < 0 ? Real(-v) : v;
  };
  return integrate_split(abs_d, 0, B, 1) / norm1(m, n);
}

inline Real mean_ratio_minus_one(int m, int n, const Real& delta) {
  Real B = Real(n) / (n + 1);
  Real num = integrate_split([&](Real t) { return delta * t * weight(m, n, t); }, 0, B, 1);
  return num / norm1(m, n);
}

}  // namespace oracle
