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

#include "primecert/certifier.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <thread>

#include "primecert/errors.hpp"
#include "primecert/published.hpp"

namespace pc = primecert;

namespace {

pc::SearchParams row46() {
  pc::SearchParams p;
  p.m = 2;
  p.n = 55;
  p.delta = "2.24285e-13";
  p.a = "1.68957e-4";
  p.T1 = "1.04538e8";
  return p;
}

pc::Certifier& published_certifier() {
  static pc::Certifier c(pc::default_constants(), {256, pc::NormMode::published, std::nullopt, std::nullopt});
  return c;
}

pc::Certifier& exact_certifier() {
  static pc::Certifier c(pc::default_constants());
  return c;
}

bool bitwise_equal(const pc::Interval& a, const pc::Interval& b) {
  return mpfr_equal_p(a.lo(), b.lo()) && mpfr_equal_p(a.hi(), b.hi());
}

}  // namespace

TEST(SearchParams, ParseAndPrint) {
  auto p = pc::SearchParams::parse("2,55,2.24285e-13,1.68957e-4,1.04538e8");
  EXPECT_EQ(p.m, 2);
  EXPECT_EQ(p.n, 55);
  EXPECT_EQ(p.sigma0, "0.7804");
  EXPECT_EQ(p.to_string(), "2,55,2.24285e-13,1.68957e-4,1.04538e8,0.7804");
  EXPECT_THROW(pc::SearchParams::parse("2,55,1e-13"), pc::DomainError);
  EXPECT_THROW(pc::SearchParams::parse("2.5,55,1e-13,0,1e9"), pc::DomainError);
}

TEST(SearchParams, InvariantsNameTheField) {
  auto c = pc::default_constants();
  auto expect_key = [&](pc::SearchParams p, const std::string& key) {
    try {
      pc::validate(p, c);
      FAIL() << key;
    } catch (const pc::InvariantError& e) {
      EXPECT_EQ(e.key(), key);
    }
  };
  auto p = row46();
  EXPECT_NO_THROW(pc::validate(p, c));
  auto q = p;
  q.m = 1;
  expect_key(q, "m");
  q = p;
  q.m = 3;
  q.n = 2;
  expect_key(q, "n");
  q = p;
  q.delta = "0";
  expect_key(q, "delta");
  q = p;
  q.delta = "2e-6";
  expect_key(q, "delta");
  q = p;
  q.a = "0.6";
  expect_key(q, "a");
  q = p;
  q.T1 = "1e8";
  expect_key(q, "T1");
  q = p;
  q.T1 = "4e12";
  expect_key(q, "T1");
  q = p;
  q.sigma0 = "0.8";
  expect_key(q, "sigma0");
}

TEST(DeltaCap, PublishedRowsToFiveDigits) {
  pc::PrecisionScope scope(256);
  for (const auto& row : pc::published_pairs()) {
    EXPECT_EQ(pc::delta_cap(row.params).lower_fixed(5), row.Delta) << row.x0.label();
  }
}

TEST(DeltaCap, SymmetricEndpoint) {
  pc::PrecisionScope scope(256);
  auto p = row46();
  p.a = "0.5";
  pc::Interval u = pc::Interval::from_decimal(p.delta) / pc::Interval(2);
  pc::Interval expected = pc::Interval(1) - pc::exp(-u);
  pc::Interval inv = pc::Interval(1) / pc::delta_cap(p);
  EXPECT_LT(std::abs(((inv - expected) / expected).mid_double()), 1e-60);
}

TEST(DeltaCap, FirstOrderApproximation) {
  pc::PrecisionScope scope(256);
  for (const auto& row : pc::published_pairs()) {
    const auto& p = row.params;
    pc::Interval delta = pc::Interval::from_decimal(p.delta);
    pc::Interval a = pc::Interval::from_decimal(p.a);
    pc::Interval approx =
        pc::Interval(1) / (delta / pc::Interval(p.m) + delta * (pc::Interval(1) - pc::Interval(2) * a));
    double rel = std::abs(((pc::delta_cap(p) - approx) / approx).mid_double());
    EXPECT_LT(rel, 1e-6) << row.x0.label();
  }
}

TEST(DeriveX0, FirstRowAboveFloor) {
  const auto& row = pc::published_pairs().front();
  pc::Interval X0 = exact_certifier().derive_X0(row.x0.value(), row.params);
  double shortfall = 1.0 - X0.mid_double() / 4e18;
  EXPECT_GT(shortfall, 1e-12);
  EXPECT_LT(shortfall, 5e-12);
}

TEST(DeriveX0, FloorViolation) {
  auto p = row46();
  p.delta = "1e-6";
  EXPECT_THROW(exact_certifier().derive_X0(pc::Interval::from_decimal("3.99e18"), p), pc::DomainError);
}

TEST(DeriveX0, RoundTrip) {
  pc::PrecisionScope scope(256);
  auto p = row46();
  pc::Interval x0 = pc::exp(pc::Interval(46));
  pc::Interval X0 = exact_certifier().derive_X0(x0, p);
  pc::Interval delta = pc::Interval::from_decimal(p.delta);
  pc::Interval a = pc::Interval::from_decimal(p.a);
  pc::Interval back = X0 * pc::exp(delta / pc::Interval(2)) * (pc::Interval(1) + delta * (pc::Interval(1) - a));
  EXPECT_LT(std::abs(((back - x0) / x0).mid_double()), 1e-70);
}

TEST(Margin, PublishedKernelCertifiesRow46) {
  auto cert = published_certifier().certify(pc::StartPoint::from_log("46"), row46());
  EXPECT_EQ(cert.status, pc::MarginStatus::positive);
  EXPECT_EQ(cert.delta_cap.lower_fixed(5), "2.9730e12");
}

TEST(Margin, ExactKernelRejectsRow46) {
  auto cert = exact_certifier().certify(pc::StartPoint::from_log("46"), row46());
  EXPECT_EQ(cert.status, pc::MarginStatus::negative);
  EXPECT_FALSE(cert.valid());
}

TEST(Margin, SmallerDeltaFails) {
  auto p = row46();
  p.delta = "2.24285e-15";
  auto cert = published_certifier().certify(pc::StartPoint::from_log("46"), p);
  EXPECT_EQ(cert.status, pc::MarginStatus::negative);
}

TEST(Margin, ZeroAImpliesNoETerm) {
  auto p = row46();
  p.a = "0";
  auto cert = published_certifier().certify(pc::StartPoint::from_log("46"), p);
  EXPECT_EQ(cert.breakdown.E_term.contribution.hi_double(), 0.0);
}

TEST(Margin, BreakdownSumsToMargin) {
  pc::PrecisionScope scope(256);
  auto cert = exact_certifier().certify(pc::StartPoint::from_log("50"), pc::published_pairs()[3].params);
  const auto& b = cert.breakdown;
  pc::Interval total = b.B0.contribution + b.B1.contribution + b.B2.contribution + b.B3_s0.contribution +
                       b.B3_1ms0.contribution + b.B41.contribution + b.B42.contribution +
                       b.trivial_term.contribution + b.omega_term.contribution + b.E_term.contribution;
  pc::Interval margin = b.F0_lower - total;
  EXPECT_TRUE(bitwise_equal(margin, b.margin));
  for (const pc::Term* t : {&b.B0, &b.B1, &b.B2, &b.B3_s0, &b.B3_1ms0, &b.B41, &b.B42}) {
    EXPECT_TRUE(t->coefficient.certainly_nonnegative());
  }
  EXPECT_FALSE(b.B0.coefficient.certainly_less(pc::min(b.B0_count_branch, b.B0_sum_branch)));
}

TEST(Margin, NondecreasingInX0) {
  pc::PrecisionScope scope(256);
  for (std::size_t i : {0u, 2u, 7u}) {
    const auto& row = pc::published_pairs()[i];
    for (auto* certifier : {&exact_certifier(), &published_certifier()}) {
      pc::Interval X0 = certifier->derive_X0(row.x0.value(), row.params);
      pc::Interval prev = certifier->evaluate_margin(X0, row.params).margin;
      for (int k = 1; k <= 12; ++k) {
        pc::Interval Xk = X0 * pc::pow(pc::Interval(10), pc::Interval(k) / pc::Interval(4));
        pc::Interval next = certifier->evaluate_margin(Xk, row.params).margin;
        EXPECT_FALSE(next.certainly_less(prev)) << row.x0.label() << " step " << k;
        prev = next;
      }
    }
  }
}

TEST(Margin, ParityRejectedBeforeEvaluation) {
  auto p = row46();
  p.m = 3;
  p.n = 2;
  EXPECT_THROW(exact_certifier().certify(pc::StartPoint::from_log("46"), p), pc::InvariantError);
}

TEST(Margin, MissingDensityEntry) {
  auto p = row46();
  p.sigma0 = "0.75";
  EXPECT_THROW(exact_certifier().certify(pc::StartPoint::from_log("46"), p), pc::InvariantError);
}

TEST(Margin, DeterministicBreakdown) {
  auto p = row46();
  auto a = exact_certifier().certify(pc::StartPoint::from_log("46"), p);
  pc::Certifier fresh(pc::default_constants());
  auto b = fresh.certify(pc::StartPoint::from_log("46"), p);
  EXPECT_TRUE(bitwise_equal(a.breakdown.margin, b.breakdown.margin));
  EXPECT_TRUE(bitwise_equal(a.breakdown.B41.contribution, b.breakdown.B41.contribution));
}

TEST(Margin, PrecisionIncreaseKeepsValidity) {
  for (const auto& row : pc::published_pairs()) {
    auto low = published_certifier().certify(row.x0, row.params);
    pc::Certifier high(pc::default_constants(), {512, pc::NormMode::published, std::nullopt, std::nullopt});
    auto hi = high.certify(row.x0, row.params);
    if (low.valid()) EXPECT_TRUE(hi.valid()) << row.x0.label();
    EXPECT_FALSE(hi.breakdown.margin.relative_width() > low.breakdown.margin.relative_width());
  }
}

TEST(Margin, ConcurrentCertificationsAgree) {
  const auto& rows = pc::published_pairs();
  std::vector<pc::Certificate> serial;
  for (const auto& r : rows) serial.push_back(exact_certifier().certify(r.x0, r.params));
  pc::Certifier shared(pc::default_constants());
  std::vector<pc::Certificate> parallel(rows.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    pool.emplace_back([&, i] { parallel[i] = shared.certify(rows[i].x0, rows[i].params); });
  }
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_TRUE(bitwise_equal(serial[i].breakdown.margin, parallel[i].breakdown.margin)) << i;
  }
}

TEST(Margin, ExactCountAtT1Substitutes) {
  pc::CertifierOptions o;
  o.count_at_T1 = 260000000;
  pc::Certifier c(pc::default_constants(), o);
  auto cert = c.certify(pc::StartPoint::from_log("46"), row46());
  EXPECT_EQ(cert.breakdown.B1_count_branch.hi_double(), 0.0);
}

TEST(Margin, ZeroSummaryOverride) {
  pc::CertifierOptions o;
  o.zero_summary = pc::ZeroSummary{"104537615", 260000000, "22.5", ""};
  pc::Certifier c(pc::default_constants(), o);
  auto a = c.certify(pc::StartPoint::from_log("46"), row46());
  auto b = exact_certifier().certify(pc::StartPoint::from_log("46"), row46());
  EXPECT_TRUE(b.breakdown.B0_sum_branch.certainly_less(a.breakdown.B0_sum_branch));
}

TEST(StartPoint, Labels) {
  EXPECT_EQ(pc::StartPoint::from_log("46").label(), "log 46");
  EXPECT_EQ(pc::StartPoint::from_value("4e18").label(), "4e18");
  EXPECT_THROW(pc::StartPoint::from_value("-1"), pc::DomainError);
  pc::PrecisionScope scope(128);
  EXPECT_NEAR(pc::StartPoint::from_value("4e18").log_value().mid_double(), std::log(4e18), 1e-12);
}
