// Copyright 2026 The foldtree Authors.
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

#include <gtest/gtest.h>

#include "foldtree/affine.h"
#include "foldtree/param_region.h"

namespace foldtree {
namespace {

const AffineExpr t = AffineExpr::Param(0);
const AffineExpr u = AffineExpr::Param(1);

TEST(AffineExpr, Arithmetic) {
  AffineExpr e = t * Rational(2) + u - AffineExpr(3);
  EXPECT_EQ(e.coefficient(0), 2);
  EXPECT_EQ(e.coefficient(1), 1);
  EXPECT_EQ(e.constant(), -3);
  EXPECT_TRUE((e - e).is_constant());
  EXPECT_EQ((t - t).terms().size(), 0u);
  EXPECT_EQ(e.evaluate({{0, Rational(1, 2)}, {1, 5}}), 3);
}

TEST(AffineExpr, Substitution) {
  AffineExpr e = t * Rational(3) + u;
  AffineExpr s = e.substitute(0, u * Rational(-1) + AffineExpr(1));
  EXPECT_FALSE(s.depends_on(0));
  EXPECT_EQ(s.coefficient(1), -2);
  EXPECT_EQ(s.constant(), 3);
}

TEST(ParamRegion, StrictAndNonStrict) {
  ParamRegion a;
  a.add_parameter(0);
  a.add(t, true);
  a.add(-t, true);
  EXPECT_FALSE(a.feasible());

  ParamRegion b;
  b.add_parameter(0);
  b.add(t, false);
  b.add(-t, false);
  ASSERT_TRUE(b.feasible());
  EXPECT_EQ(b.representative().at(0), 0);
}

TEST(ParamRegion, ConstantConstraintsAreCheckedImmediately) {
  ParamRegion r;
  r.add(AffineExpr(-1), false);
  EXPECT_FALSE(r.feasible());
  ParamRegion s;
  s.add(AffineExpr(0), true);
  EXPECT_FALSE(s.feasible());
  ParamRegion ok;
  ok.add(AffineExpr(0), false);
  EXPECT_TRUE(ok.feasible());
}

TEST(ParamRegion, TwoDimensionalProjection) {
  // 0 < t, 0 < u, t + u < 1.
  ParamRegion r;
  r.add_parameter(0);
  r.add_parameter(1);
  r.add(t, true);
  r.add(u, true);
  r.add(AffineExpr(1) - t - u, true);
  ASSERT_TRUE(r.feasible());
  Interval i = r.range(t - u);
  ASSERT_TRUE(i.lo && i.hi);
  EXPECT_EQ(*i.lo, -1);
  EXPECT_EQ(*i.hi, 1);
  EXPECT_TRUE(i.lo_open);
  EXPECT_EQ(i.length(), 2);
  Assignment rep = r.representative();
  EXPECT_TRUE(r.contains(rep));
  r.add(t - u * Rational(3), false);
  r.add(u - Rational(1, 2), true);
  EXPECT_FALSE(r.feasible());
}

TEST(ParamRegion, SubstituteAndPin) {
  ParamRegion r;
  r.add_parameter(0);
  r.add_parameter(1);
  r.add(t, true);
  r.add(AffineExpr(2) - t - u, true);
  r.substitute(1, t);
  r.prune_parameters({0});
  EXPECT_EQ(r.dimension(), 1);
  Interval i = r.range(t);
  EXPECT_EQ(*i.lo, 0);
  EXPECT_EQ(*i.hi, 1);
  r.pin_representative({{0, Rational(1, 4)}});
  EXPECT_EQ(r.representative().at(0), Rational(1, 4));
}

TEST(ParamRegion, UnboundedRange) {
  ParamRegion r;
  r.add_parameter(0);
  r.add(t, false);
  Interval i = r.range(t);
  ASSERT_TRUE(i.lo.has_value());
  EXPECT_FALSE(i.hi.has_value());
  EXPECT_FALSE(i.lo_open);
}

}  // namespace
}  // namespace foldtree
