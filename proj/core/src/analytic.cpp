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

#include "primecert/analytic.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>

#include "primecert/errors.hpp"

namespace primecert {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

Interval ui(long v) { return Interval(v); }

// Shape parameters of the A-part of D(sigma, H e^v):
//   g(v) = (alpha + v)^p (ell + v)^q,  weight e^{-gamma v}.
struct DensityShape {
  Interval alpha;  // log(kH)
  Interval ell;    // log H
  Interval p;      // 2 sigma
  Interval q;      // 5 - 4 sigma
  Interval c;      // 8(1 - sigma)/3
};

DensityShape shape_of(const DensityCoefficients& d, const ConstantValues& cv) {
  DensityShape s;
  s.alpha = log(cv.k * cv.H);
  s.ell = cv.log_H;
  s.p = ui(2) * d.sigma;
  s.q = ui(5) - ui(4) * d.sigma;
  s.c = ui(8) * (ui(1) - d.sigma) / ui(3);
  return s;
}

Interval log_g(const DensityShape& s, const Interval& v) { return s.p * log(s.alpha + v) + s.q * log(s.ell + v); }
Interval dlog_g(const DensityShape& s, const Interval& v) { return s.p / (s.alpha + v) + s.q / (s.ell + v); }

// int_0^h e^{kappa s} ds for kappa < 0.
Interval panel_weight(const Interval& kappa, const Interval& h) { return expm1(kappa * h) / kappa; }

}  // namespace

DensityCoefficients density_for(const AnalyticConstants& c, const std::string& sigma) {
  const ZeroDensityEntry* e = c.find_density(sigma);
  if (e == nullptr) throw DomainError("no zero-density entry for sigma = " + sigma);
  return {Interval::from_decimal(e->sigma), Interval::from_decimal(e->A_sigma), Interval::from_decimal(e->B_sigma)};
}

Interval count_main_term(const Interval& T) {
  require(T.certainly_positive(), "P(T): T must be positive");
  Interval x = T / (ui(2) * Interval::pi());
  return x * log(x) - x + ui(7) / ui(8);
}

Interval count_error_bound(const Interval& T, const ConstantValues& cv) {
  require(!T.certainly_less(cv.count_T0), "R(T): T below the validity threshold e");
  Interval lt = log(T);
  Interval llt = lt.certainly_positive() ? log(lt) : Interval::hull(Interval(0), log(upper_point(lt)));
  return cv.a1 * lt + cv.a2 * llt + cv.a3;
}

Interval density_bound(const DensityCoefficients& d, const Interval& T, const ConstantValues& cv) {
  require(!T.certainly_less(cv.H), "D(sigma,T): T must be >= H");
  Interval lt = log(T);
  Interval lkt = log(cv.k * T);
  Interval c = ui(8) * (ui(1) - d.sigma) / ui(3);
  return d.A * pow(lkt, ui(2) * d.sigma) * pow(lt, ui(5) - ui(4) * d.sigma) * exp(c * lt) + d.B * lt * lt;
}

Interval s1(const Interval& T0, const Interval& T1, const ConstantValues& cv) {
  require(!T0.certainly_less(cv.two_pi), "S1: T0 must be >= 2 pi");
  require(!T1.certainly_less(T0), "S1: T1 must be >= T0");
  require(!cv.H.certainly_less(T1), "S1: T1 must be <= H");
  Interval main = log(T1 / T0) * log(sqrt(T0 * T1) / cv.two_pi) / cv.two_pi;
  Interval err = (cv.A0 + cv.A1 * log(T0)) * ui(2) / (T0 * T0) + (cv.A1 + cv.A2) / (T0 * T0);
  return main + count_error_bound(T0, cv) / T0 + (count_error_bound(T1, cv) + ui(1) / ui(2)) / T1 + err;
}

Interval s2_window(int m, const Interval& U, const Interval& V, const ConstantValues& cv) {
  require(m >= 1, "S2: m must be >= 1");
  require(!U.certainly_less(cv.two_pi), "S2: lower limit must be >= 2 pi");
  require(!V.certainly_less(U), "S2: window upper limit below lower limit");
  const auto mu = static_cast<unsigned long>(m);
  Interval mi(m);
  auto head = [&](const Interval& T) { return (ui(1) + mi * log(T / cv.two_pi)) / (mi * mi * pow(T, mu)); };
  Interval main = (head(U) - head(V)) / cv.two_pi;
  main = max(main, Interval(0));
  Interval tail = count_error_bound(U, cv) / pow(U, mu + 1) + (count_error_bound(V, cv) + ui(1) / ui(2)) / pow(V, mu + 1);
  Interval err = (cv.A0 + cv.A1 * log(U)) * ui(2) * (mi + ui(1)) / pow(U, mu + 2) + (cv.A1 + cv.A2) / pow(U, mu + 2);
  return main + tail + err;
}

Interval s2(int m, const Interval& T1, const ConstantValues& cv) {
  require(m >= 2, "S2: m must be >= 2");
  require(!cv.H.certainly_less(T1), "S2: T1 must be <= H");
  return s2_window(m, T1, cv.H, cv);
}

Interval s3(int m, const ConstantValues& cv) {
  require(m >= 2, "S3: m must be >= 2");
  const auto mu = static_cast<unsigned long>(m);
  Interval mi(m);
  const Interval& H = cv.H;
  Interval main = (ui(1) + mi * log(H / cv.two_pi)) / (mi * mi * pow(H, mu)) / cv.two_pi;
  Interval err = (cv.A0 + cv.A1 * cv.log_H) * ui(2) * (mi + ui(1)) / pow(H, mu + 1) + (cv.A1 + cv.A2) / pow(H, mu + 2);
  return main + count_error_bound(H, cv) / pow(H, mu + 1) + err;
}

Interval s4(int m, const DensityCoefficients& d, const ConstantValues& cv) {
  require(m >= 2, "S4: m must be >= 2");
  const DensityShape s = shape_of(d, cv);
  const Interval gamma = ui(m + 1) - s.c;
  require(gamma.certainly_positive(), "S4: integral diverges (8(1-sigma)/3 >= m+1)");
  require(s.alpha.certainly_positive(), "S4: requires kH > 1");

  // Panel grid in doubles, widening as e^{-gamma v} decays.
  const double gamma_d = gamma.mid_double();
  const double v_end = 80.0 / gamma_d;
  const double h0 = 2.0e-3;
  const double h_max = 0.25;

  Interval lower(0);
  Interval upper(0);
  double v = 0.0;
  Interval vi(0);
  Interval phi_i = log_g(s, vi);
  while (v < v_end) {
    double h = std::min(h_max, h0 * std::exp(gamma_d * v / 3.0));
    double v_next = v + h;
    Interval vn = Interval::from_double(v_next);
    Interval width = vn - vi;
    Interval phi_n = log_g(s, vn);
    Interval base = exp(phi_i - gamma * vi);
    Interval tangent = dlog_g(s, vi) - gamma;
    Interval chord = (phi_n - phi_i) / width - gamma;
    upper += base * panel_weight(upper_point(tangent), width);
    lower += base * panel_weight(lower_point(chord), width);
    v = v_next;
    vi = vn;
    phi_i = phi_n;
  }
  // Tail: g(v) <= g(V) e^{phi'(V)(v-V)}.
  Interval tail = exp(phi_i - gamma * vi) / (gamma - dlog_g(s, vi));
  upper += tail;
  Interval integral_A = Interval::hull(lower_point(lower), upper_point(upper));

  const Interval beta(m + 1);
  const Interval& ell = s.ell;
  Interval integral_B = ell * ell / beta + ui(2) * ell / (beta * beta) + ui(2) / (beta * beta * beta);

  Interval Hc = exp(s.c * cv.log_H);
  Interval scale = beta / pow(cv.H, static_cast<unsigned long>(m + 1));
  return scale * (d.A * Hc * integral_A + d.B * integral_B);
}

Interval s5_from_s4(const Interval& s4_value, const Interval& X0, int m, const DensityCoefficients& d,
                    const ConstantValues& cv) {
  Interval boundary = density_bound(d, cv.H, cv) / pow(cv.H, static_cast<unsigned long>(m + 1));
  Interval damp = exp(-(log(X0) / (cv.R0 * cv.log_H)));
  return s4_value - boundary * (ui(1) - damp);
}

Interval s5(const Interval& X0, int m, const DensityCoefficients& d, const ConstantValues& cv) {
  return s5_from_s4(s4(m, d, cv), X0, m, d, cv);
}

namespace {

struct DoubleShape {
  double A, B, p, q, c, alpha, ell, m;
};

DoubleShape double_shape(int m, const DensityCoefficients& d, const ConstantValues& cv) {
  const DensityShape s = shape_of(d, cv);
  return {d.A.mid_double(), d.B.mid_double(), s.p.mid_double(), s.q.mid_double(), s.c.mid_double(),
          s.alpha.mid_double(), s.ell.mid_double(), static_cast<double>(m)};
}

// log of the A-part of D(sigma, H e^v) / H^c.
double log_a_part(const DoubleShape& s, double v) {
  return std::log(s.A) + s.p * std::log(s.alpha + v) + s.q * std::log(s.ell + v) + s.c * v;
}

// D(sigma, H e^v) e^{-w v} / H^c.
double d_scaled(const DoubleShape& s, double v, double w, double Hc) {
  return std::exp(log_a_part(s, v) - w * v) + s.B * (s.ell + v) * (s.ell + v) * std::exp(-w * v) / Hc;
}

// t D'(t) e^{-w v} / H^c at t = H e^v.
double t_dd_scaled(const DoubleShape& s, double v, double w, double Hc) {
  double a_part = std::exp(log_a_part(s, v) - w * v);
  return a_part * (s.p / (s.alpha + v) + s.q / (s.ell + v) + s.c) + 2.0 * s.B * (s.ell + v) * std::exp(-w * v) / Hc;
}

}  // namespace

double s4_quadrature_derivative_form(int m, const DensityCoefficients& d, const ConstantValues& cv) {
  const DoubleShape s = double_shape(m, d, cv);
  const double H = cv.H.mid_double();
  const double Hc = std::exp(s.c * s.ell);
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double v) { return t_dd_scaled(s, v, s.m + 1.0, Hc); };
  double tol = std::sqrt(std::numeric_limits<double>::epsilon());
  double integral = integrator.integrate(f, tol);
  double boundary = d_scaled(s, 0.0, 0.0, Hc);
  return (boundary + integral) * Hc / std::pow(H, s.m + 1.0);
}

double s4_quadrature_parts_form(int m, const DensityCoefficients& d, const ConstantValues& cv) {
  const DoubleShape s = double_shape(m, d, cv);
  const double H = cv.H.mid_double();
  const double Hc = std::exp(s.c * s.ell);
  auto f = [&](double v) { return d_scaled(s, v, s.m + 1.0, Hc); };
  double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-12);
  return (s.m + 1.0) * integral * Hc / std::pow(H, s.m + 1.0);
}

}  // namespace primecert
