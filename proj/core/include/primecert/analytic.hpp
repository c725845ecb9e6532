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

#include <string>

#include "primecert/constants.hpp"
#include "primecert/interval.hpp"

namespace primecert {

/// (sigma, A(sigma), B(sigma)) parsed at the working precision.
struct DensityCoefficients {
  Interval sigma;
  Interval A;
  Interval B;
};

/// Looks up the density entry for `sigma`; throws DomainError if none matches.
DensityCoefficients density_for(const AnalyticConstants& c, const std::string& sigma);

/// P(T) = T/(2pi) log(T/(2pi)) - T/(2pi) + 7/8, the main term of N(T).
Interval count_main_term(const Interval& T);

/// R(T) = a1 log T + a2 log log T + a3, valid for T >= count_T0 (= e).
Interval count_error_bound(const Interval& T, const ConstantValues& cv);

/// D(sigma, T) bounding N(sigma, T) for T >= H.
Interval density_bound(const DensityCoefficients& d, const Interval& T, const ConstantValues& cv);

/// Upper bound for sum_{T0 < gamma <= T1} 1/gamma.
Interval s1(const Interval& T0, const Interval& T1, const ConstantValues& cv);

/// Upper bound for sum_{U < gamma <= V} gamma^-(m+1) by partial summation
/// against N(T); s2(m, T1) is this with V = H.
Interval s2_window(int m, const Interval& U, const Interval& V, const ConstantValues& cv);

/// Upper bound for sum_{T1 < gamma <= H} gamma^-(m+1).
Interval s2(int m, const Interval& T1, const ConstantValues& cv);

/// Upper bound for sum_{gamma > H} gamma^-(m+1).
Interval s3(int m, const ConstantValues& cv);

/// Enclosure of (m+1) int_H^inf D(sigma,t) t^-(m+2) dt, which equals
/// D(sigma,H)/H^(m+1) + int_H^inf dD/dt t^-(m+1) dt.  Rigorous: the A-part of
/// the integrand is log-concave after t = H e^v, so per-panel tangent lines
/// give upper bounds and chords give lower bounds in closed form.
Interval s4(int m, const DensityCoefficients& d, const ConstantValues& cv);

/// s4 with the boundary term damped by X0^(-1/(R0 log H)).
Interval s5(const Interval& X0, int m, const DensityCoefficients& d, const ConstantValues& cv);
/// Same, reusing a precomputed s4 value.
Interval s5_from_s4(const Interval& s4_value, const Interval& X0, int m, const DensityCoefficients& d,
                    const ConstantValues& cv);

/// Non-rigorous numerical routes to S4, used to cross-check the enclosure.
/// Derivative form: D(H)/H^(m+1) + int_H^inf dD/dt t^-(m+1) dt (exp-sinh quadrature).
double s4_quadrature_derivative_form(int m, const DensityCoefficients& d, const ConstantValues& cv);
/// Integrated-by-parts form: (m+1) int_H^inf D t^-(m+2) dt (Gauss-Kronrod on a mapped half-line).
double s4_quadrature_parts_form(int m, const DensityCoefficients& d, const ConstantValues& cv);

}  // namespace primecert
