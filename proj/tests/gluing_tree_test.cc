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

#include "foldtree/error.h"
#include "foldtree/families.h"
#include "foldtree/gluing_tree.h"
#include "foldtree/polygon.h"

namespace foldtree {
namespace {

TEST(GluingNode, LabelsAndAngles) {
  PolygonSpec sq = unit_square();
  GluingNode n = make_node({BoundaryPoint::Vertex(2), BoundaryPoint::Vertex(0),
                            BoundaryPoint::Interior(1, AffineExpr(Rational(1, 2)))},
                           sq);
  EXPECT_EQ(label_string(n), "{v1, v3, e2}");
  EXPECT_EQ(n.vertex_count(), 2);
  EXPECT_EQ(n.interior_count(), 1);
  EXPECT_EQ(n.angle_sum.exact(), 2);
  EXPECT_FALSE(n.is_fold_point());
  GluingNode f = make_node({BoundaryPoint::Interior(3, AffineExpr(Rational(1, 2)))}, sq);
  EXPECT_TRUE(f.is_fold_point());
  EXPECT_EQ(f.angle_sum.exact(), 1);
  EXPECT_EQ(label_string(f), "{e4}");
}

TEST(GluingTree, BoundaryPosition) {
  PolygonSpec r = rectangle(2, 1);
  EXPECT_EQ(boundary_position(BoundaryPoint::Vertex(2), r).constant(), 3);
  AffineExpr pos = boundary_position(BoundaryPoint::Interior(1, AffineExpr::Param(4)), r);
  EXPECT_EQ(pos.constant(), 2);
  EXPECT_EQ(pos.coefficient(4), 1);
}

TEST(GluingTree, DegreesAndLeaves) {
  PolygonSpec sq = unit_square();
  GluingTree t;
  t.nodes.push_back(make_node({BoundaryPoint::Vertex(0), BoundaryPoint::Vertex(1),
                               BoundaryPoint::Vertex(2), BoundaryPoint::Vertex(3)},
                              sq));
  for (int e = 0; e < 4; ++e) {
    t.nodes.push_back(make_node({BoundaryPoint::Interior(e, AffineExpr(Rational(1, 2)))}, sq));
    t.arcs.emplace_back(0, e + 1);
  }
  EXPECT_EQ(t.degrees()[0], 4);
  EXPECT_EQ(t.leaf_count(), 4);
  EXPECT_EQ(t.fold_leaf_count(), 4);
  EXPECT_TRUE(find_rolling_belts(t).empty());
}

TEST(GluingTree, RectangleFamilyHasTwoBelts) {
  GluingTree t = fold_rectangle_family(2, 1, Rational(1, 2));
  ASSERT_EQ(t.belts.size(), 2u);
  for (const RollingBelt& b : t.belts) {
    ASSERT_TRUE(b.interval.lo && b.interval.hi);
    EXPECT_GT(b.interval.length(), 0);
    EXPECT_EQ(b.path.front(), b.leaf_a);
    EXPECT_EQ(b.path.back(), b.leaf_b);
  }
}

TEST(GluingTree, Dot) {
  EXPECT_THROW(to_dot(GluingTree{}), Error);
  GluingTree t = fold_rectangle_family(2, 1, Rational(1, 2));
  std::string dot = to_dot(t, "rect");
  EXPECT_EQ(dot.rfind("graph \"rect\" {", 0), 0u);
  EXPECT_NE(dot.find("{e1}"), std::string::npos);
  EXPECT_NE(dot.find("red"), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}

}  // namespace
}  // namespace foldtree
