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

// Acceptance checks: one PASS/FAIL line per criterion.
//   primecert_acceptance            run all criteria
//   primecert_acceptance 3 7        run the listed criteria

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "primecert/analytic.hpp"
#include "primecert/certifier.hpp"
#include "primecert/optimizer.hpp"
#include "primecert/published.hpp"
#include "primecert/smoothing.hpp"
#include "primecert/zero_data.hpp"

namespace pc = primecert;
using oracle::Real;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

pc::Certifier make_certifier(pc::NormMode mode, int bits = 256) {
  pc::CertifierOptions o;
  o.norm_mode = mode;
  o.precision_bits = bits;
  return pc::Certifier(pc::default_constants(), o);
}

void info(const std::string& text) { std::cout << "       " << text << "\n"; }

Outcome delta_formula() {
  pc::PrecisionScope scope(256);
  int ok = 0;
  std::string misses;
  for (const auto& row : pc::published_pairs()) {
    std::string got = pc::delta_cap(row.params).lower_fixed(5);
    if (got == row.Delta) {
      ++ok;
    } else {
      misses += " " + row.x0.label() + ":" + got;
    }
  }
  return {ok == 12, std::to_string(ok) + "/12 rows match to 5 significant digits" + misses};
}

struct RowCheck {
  int positive = 0;
  int escaped = 0;
  std::string failed;
};

RowCheck certify_rows(const pc::Certifier& c) {
  RowCheck out;
  for (const auto& row : pc::published_pairs()) {
    if (c.certify(row.x0, row.params).valid()) {
      ++out.positive;
      continue;
    }
    pc::PrecisionScope scope(256);
    pc::SearchParams p = row.params;
    p.delta = (pc::Interval::from_decimal(row.params.delta) * pc::Interval::from_decimal("1.01")).upper_string(8);
    if (c.certify(row.x0, p).valid()) {
      ++out.escaped;
      out.failed += " " + row.x0.label() + "(delta+1%)";
    } else {
      out.failed += " " + row.x0.label();
    }
  }
  return out;
}

Outcome table_certification() {
  RowCheck exact = certify_rows(make_certifier(pc::NormMode::exact));
  RowCheck published = certify_rows(make_certifier(pc::NormMode::published));
  info("published closed form for ||f^(m)||_2: " + std::to_string(published.positive) + " positive, " +
       std::to_string(published.escaped) + " after delta+1%;" + (published.failed.empty() ? " none" : published.failed));
  std::string detail = "exact kernel: " + std::to_string(exact.positive) + " positive, " +
                       std::to_string(exact.escaped) + " after delta+1%, failing:" +
                       (exact.failed.empty() ? " none" : exact.failed);
  return {exact.positive + exact.escaped == 12, detail};
}

Outcome optimizer_attainment() {
  const std::vector<std::pair<std::string, std::string>> targets = {{"46", "1e12"}, {"50", "1e13"}, {"60", "1e15"}};
  auto exact = make_certifier(pc::NormMode::exact);
  auto published = make_certifier(pc::NormMode::published);
  bool all = true;
  std::ostringstream detail;
  for (const auto& [log_x0, floor] : targets) {
    pc::SearchConfig cfg;
    cfg.seed = 0;
    std::string got = "infeasible";
    try {
      auto r = pc::optimize(exact, pc::StartPoint::from_log(log_x0), cfg);
      got = r.best.delta_cap.lower_fixed(5);
      pc::PrecisionScope scope(128);
      if (r.best.delta_cap.certainly_less(pc::Interval::from_decimal(floor))) all = false;
      info("log x0 = " + log_x0 + ": exact kernel best " + got + " at " + r.best.params.to_string() + " (" +
           std::to_string(r.evaluations) + " evaluations)");
    } catch (const pc::InfeasibleSearch&) {
      all = false;
    }
    cfg.generations = 60;
    try {
      auto r = pc::optimize(published, pc::StartPoint::from_log(log_x0), cfg);
      info("log x0 = " + log_x0 + ": published closed form, 60 generations, best " +
           r.best.delta_cap.lower_fixed(5) + " at " + r.best.params.to_string());
    } catch (const pc::InfeasibleSearch&) {
      info("log x0 = " + log_x0 + ": published closed form infeasible");
    }
    detail << " " << log_x0 << ": " << got << " (need " << floor << ");";
  }
  return {all, "exact kernel, default budget, seed 0:" + detail.str()};
}

Outcome regression() {
  pc::PrecisionScope scope(256);
  std::vector<std::pair<double, double>> rows;
  for (const auto& row : pc::published_pairs()) {
    rows.emplace_back(row.x0.log_value().mid_double(), pc::log(pc::delta_cap(row.params)).mid_double());
  }
  auto fit = pc::fit_regression(rows);
  char buf[128];
  std::snprintf(buf, sizeof buf, "slope %.5f (0.496 +- 0.010), intercept %.5f (5.896 +- 0.050)", fit.slope,
                fit.intercept);
  return {std::abs(fit.slope - 0.496) <= 0.010 && std::abs(fit.intercept - 5.896) <= 0.050, buf};
}

double rel(const pc::Interval& x, const Real& ref) {
  Real v = oracle::from_interval(x);
  return static_cast<double>(boost::multiprecision::abs((v - ref) / ref));
}

Outcome oracle_suite() {
  pc::PrecisionScope scope(256);
  double worst_norm1 = 0, worst_norm2 = 0, worst_nu = 0, worst_mean = 0, worst_l0 = 0;
  int cases = 0;
  for (int m : {2, 3}) {
    for (int n : {1, 3, 5, 9, 15, 55}) {
      if (m % 2 == 1 && n % 2 == 0) continue;
      pc::WeightSpec w(m, n);
      ++cases;
      worst_norm1 = std::max(worst_norm1, rel(pc::norm1(w), oracle::norm1(m, n)));
      worst_norm2 = std::max(worst_norm2, rel(pc::norm2_mth_derivative(w), sqrt(oracle::norm2_squared(m, n))));
      for (const char* a : {"1.68957e-4", "0.1", "0.5"}) {
        worst_nu = std::max(worst_nu, rel(pc::nu(w, pc::Interval::from_decimal(a)), oracle::nu(m, n, Real(a))));
      }
      pc::Interval delta = pc::Interval::from_decimal("1e-6");
      worst_mean = std::max(worst_mean, rel(pc::mean_ratio(w, delta) - pc::Interval(1),
                                            oracle::mean_ratio_minus_one(m, n, Real("1e-6"))));
      pc::SmoothingKernel k(w, pc::NormMode::exact);
      worst_l0 = std::max(worst_l0, rel(pc::Interval::from_rational(k.lambda0()), oracle::lambda0(m, n)));
    }
  }
  pc::WeightSpec w21(2, 1);
  bool hand = pc::norm1_exact(w21) == mpq_class(8, 15) &&
              pc::SmoothingKernel(w21, pc::NormMode::exact).lambda0() == mpq_class(15, 4) &&
              pc::norm2_squared_exact(w21) == mpq_class(1024, 5);
  bool pass = hand && worst_norm1 < 1e-20 && worst_norm2 < 1e-15 && worst_nu < 1e-20 && worst_mean < 1e-20 &&
              worst_l0 < 1e-15;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d shapes; worst rel err norm1 %.1e, norm2 %.1e, nu %.1e, mean_ratio %.1e, lambda0 %.1e; hand values %s",
                cases, worst_norm1, worst_norm2, worst_nu, worst_mean, worst_l0, hand ? "exact" : "WRONG");
  return {pass, buf};
}

Outcome zero_sum_soundness() {
  pc::PrecisionScope scope(256);
  auto zeros = pc::ingest(std::string(PRIMECERT_TEST_DATA) + "/zeta_zeros_100.txt");
  pc::ConstantValues cv(pc::default_constants());
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> pick(15.0, 236.0);
  int checked = 0, dominated = 0;
  for (int m : {2, 3, 4}) {
    for (int i = 0; i < 20; ++i) {
      double a = pick(rng), b = pick(rng);
      if (a > b) std::swap(a, b);
      char U[32], V[32];
      std::snprintf(U, sizeof U, "%.6f", a);
      std::snprintf(V, sizeof V, "%.6f", b);
      pc::Interval est = pc::s2_window(m, pc::Interval::from_decimal(U), pc::Interval::from_decimal(V), cv);
      pc::Interval sum = pc::oracle_sum_inverse_power(zeros, m, U, V);
      ++checked;
      if (sum.certainly_less(est)) ++dominated;
    }
  }
  return {dominated == checked && zeros.size() >= 100,
          std::to_string(dominated) + "/" + std::to_string(checked) + " windows dominated over " +
              std::to_string(zeros.size()) + " zeros"};
}

Outcome s4_identity() {
  pc::PrecisionScope scope(256);
  auto c = pc::default_constants();
  pc::ConstantValues cv(c);
  double worst = 0;
  bool inside = true;
  for (const char* sigma : {"0.7804", "0.9"}) {
    auto d = pc::density_for(c, sigma);
    for (int m : {2, 3}) {
      double q1 = pc::s4_quadrature_derivative_form(m, d, cv);
      double q2 = pc::s4_quadrature_parts_form(m, d, cv);
      worst = std::max(worst, std::abs(q1 / q2 - 1));
      pc::Interval enclosure = pc::s4(m, d, cv);
      double tol = 1e-9 * enclosure.mid_double();
      if (q1 < enclosure.lo_double() - tol || q1 > enclosure.hi_double() + tol) inside = false;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "worst relative gap between quadrature routes %.2e (< 1e-6); both inside enclosure: %s",
                worst, inside ? "yes" : "no");
  return {worst < 1e-6, buf};
}

Outcome rigor_stability() {
  auto low = make_certifier(pc::NormMode::exact, 256);
  auto high = make_certifier(pc::NormMode::exact, 512);
  double worst = 0;
  int flips = 0;
  for (const auto& row : pc::published_pairs()) {
    auto a = low.certify(row.x0, row.params);
    auto b = high.certify(row.x0, row.params);
    pc::PrecisionScope scope(512);
    double change = std::abs(((b.breakdown.margin - a.breakdown.margin) / b.breakdown.margin).mid_double());
    worst = std::max(worst, change);
    if (a.status != b.status) ++flips;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "256 -> 512 bits: worst relative margin change %.2e, sign flips %d", worst, flips);
  return {worst < 1e-20 && flips == 0, buf};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "delta formula reproduction", delta_formula},
      {2, "certification of the published pairs", table_certification},
      {3, "optimizer attainment", optimizer_attainment},
      {4, "regression of log Delta on log x0", regression},
      {5, "closed forms against oracles", oracle_suite},
      {6, "zero-sum soundness", zero_sum_soundness},
      {7, "S4 quadrature identity", s4_identity},
      {8, "rigor stability", rigor_stability},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char t[32];
    std::snprintf(t, sizeof t, " (%.1f s)", secs);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": " << o.detail << t << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
