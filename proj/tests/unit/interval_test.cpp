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

#include <gtest/gtest.h>
#include <mpfr.h>

#include <stdexcept>

using primecert::Interval;
using primecert::PrecisionScope;

namespace {

bool contains(const Interval& x, const Interval& point) {
  return mpfr_lessequal_p(x.lo(), point.lo()) && mpfr_lessequal_p(point.hi(), x.hi());
}

}  // namespace

TEST(Interval, ThirdIsEnclosedWithWidthNearUlp) {
  PrecisionScope scope(128);
  Interval third = Interval(1) / Interval(3);
  EXPECT_TRUE(mpfr_less_p(third.lo(), third.hi()));
  EXPECT_LT(third.relative_width(), 1e-37);
  Interval back = third * Interval(3);
  EXPECT_TRUE(contains(back, Interval(1)));
}

TEST(Interval, DecimalParsingRoundsOutward) {
  PrecisionScope scope(64);
  Interval tenth = Interval::from_decimal("0.1");
  EXPECT_FALSE(tenth.is_point());
  Interval exact = Interval::from_decimal("0.5");
  EXPECT_TRUE(exact.is_point());
  EXPECT_THROW(Interval::from_decimal("1.2.3"), std::invalid_argument);
  EXPECT_THROW(Interval::from_decimal(""), std::invalid_argument);
}

TEST(Interval, RationalLiteral) {
  PrecisionScope scope(128);
  Interval q = Interval::from_decimal("1/150");
  Interval ref = Interval(1) / Interval(150);
  EXPECT_FALSE(q.certainly_less(ref));
  EXPECT_FALSE(ref.certainly_less(q));
  EXPECT_LT(q.relative_width(), 1e-36);
}

TEST(Interval, DivisionByIntervalContainingZeroThrows) {
  Interval z = Interval::hull(Interval(-1), Interval(1));
  EXPECT_THROW(Interval(1) / z, std::domain_error);
}

TEST(Interval, TranscendentalsEncloseKnownValues) {
  PrecisionScope scope(200);
  Interval e = primecert::exp(Interval(1));
  EXPECT_TRUE(contains(e, Interval::e()) || !Interval::e().certainly_less(e));
  Interval l = primecert::log(Interval::e());
  EXPECT_TRUE(contains(l, Interval(1)));
  Interval tiny = Interval::from_decimal("1e-40");
  Interval em1 = primecert::expm1(tiny);
  EXPECT_LT((em1 / tiny - Interval(1)).hi_double(), 1e-39);
  Interval s = primecert::sqrt(Interval(4));
  EXPECT_TRUE(contains(s, Interval(2)));
}

TEST(Interval, SubtractionKeepsDirectedRounding) {
  PrecisionScope scope(64);
  Interval x = Interval::from_decimal("0.1");
  Interval d = x - x;
  EXPECT_TRUE(d.contains_zero());
  EXPECT_FALSE(d.certainly_positive());
  EXPECT_FALSE(d.certainly_negative());
}

TEST(Interval, PrecisionScopeRestores) {
  int before = primecert::working_precision();
  {
    PrecisionScope scope(512);
    EXPECT_EQ(primecert::working_precision(), 512);
    Interval x(1);
    EXPECT_EQ(x.precision(), 512);
  }
  EXPECT_EQ(primecert::working_precision(), before);
}

TEST(Interval, StringsRoundOutward) {
  PrecisionScope scope(128);
  Interval third = Interval(1) / Interval(3);
  EXPECT_EQ(third.lower_string(5), "3.3333e-1");
  EXPECT_EQ(third.upper_string(5), "3.3334e-1");
}

TEST(Interval, HugeMagnitudesStayFinite) {
  PrecisionScope scope(256);
  Interval x = primecert::exp(Interval(600));
  EXPECT_NEAR(x.log_mid(), 600.0, 1e-9);
  Interval inv = Interval(1) / x;
  EXPECT_TRUE(inv.certainly_positive());
}
