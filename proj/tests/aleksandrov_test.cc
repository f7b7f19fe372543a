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

#include "foldtree/aleksandrov.h"
#include "foldtree/classify.h"
#include "foldtree/error.h"
#include "foldtree/families.h"
#include "support/oracles.h"

namespace foldtree {
namespace {

BoundaryPoint mid(const PolygonSpec& p, int e) {
  return BoundaryPoint::Interior(e, AffineExpr(p.exact_length(e) / 2));
}

GluingTree square_plus() {
  PolygonSpec sq = unit_square();
  GluingTree t;
  t.nodes.push_back(make_node({BoundaryPoint::Vertex(0), BoundaryPoint::Vertex(1),
                               BoundaryPoint::Vertex(2), BoundaryPoint::Vertex(3)},
                              sq));
  for (int e = 0; e < 4; ++e) {
    t.nodes.push_back(make_node({mid(sq, e)}, sq));
    t.arcs.emplace_back(0, e + 1);
  }
  return t;
}

TEST(Aleksandrov, AllFourSquareCornersAtOneFlatPoint) {
  // Four corners meet with total angle exactly 2pi; each side folds at its
  // midpoint. A valid gluing whose glued corner point is not a vertex.
  PolygonSpec sq = unit_square();
  ValidityReport r = check_aleksandrov(square_plus(), sq);
  EXPECT_TRUE(r.valid);
  ASSERT_FALSE(r.nodes.empty());
  EXPECT_TRUE(r.nodes[0].flat);
  EXPECT_EQ(classify_shape(square_plus()), Shape::kPlus);
}

TEST(Aleksandrov, CrossingIdentificationIsNotASphere) {
  PolygonSpec sq = unit_square();
  GluingTree t;
  t.nodes.push_back(make_node({BoundaryPoint::Vertex(0), BoundaryPoint::Vertex(2)}, sq));
  t.nodes.push_back(make_node({BoundaryPoint::Vertex(1), BoundaryPoint::Vertex(3)}, sq));
  t.arcs = {{0, 1}};
  bool valid = true;
  try {
    valid = check_aleksandrov(t, sq).valid;
  } catch (const Error&) {
    valid = false;
  }
  EXPECT_FALSE(valid);
}

TEST(Aleksandrov, AngleBudget) {
  // All five pentagon corners at one point: 3pi.
  PolygonSpec p = regular_ngon(5);
  GluingTree t;
  std::vector<BoundaryPoint> corners;
  for (int v = 0; v < 5; ++v) corners.push_back(BoundaryPoint::Vertex(v));
  t.nodes.push_back(make_node(corners, p));
  for (int e = 0; e < 5; ++e) {
    t.nodes.push_back(make_node({mid(p, e)}, p));
    t.arcs.emplace_back(0, e + 1);
  }
  ValidityReport r = check_aleksandrov(t, p);
  EXPECT_FALSE(r.angles_ok);
  EXPECT_FALSE(r.valid);
  ASSERT_FALSE(r.nodes.empty());
  EXPECT_FALSE(r.nodes[0].within_budget);
}

TEST(Aleksandrov, StoredAngleSumMustMatch) {
  GluingTree t = square_plus();
  t.nodes[0].angle_sum = Scalar(Rational(3, 2));
  EXPECT_FALSE(check_aleksandrov(t, unit_square()).valid);
}

TEST(Aleksandrov, CubeGluingOfTheCross) {
  PolygonSpec cross = latin_cross();
  GluingTree t = testing::cube_gluing_of_cross(cross);
  ValidityReport r = check_aleksandrov(t, cross);
  EXPECT_TRUE(r.valid);
  for (const NodeCheck& n : r.nodes) {
    EXPECT_EQ(n.angle_sum.exact(), Rational(3, 2));  // eight cube corners
  }
}

TEST(Aleksandrov, MissingVertexIsIncomplete) {
  PolygonSpec sq = unit_square();
  GluingTree t = square_plus();
  t.nodes[0] = make_node({BoundaryPoint::Vertex(0), BoundaryPoint::Vertex(1),
                          BoundaryPoint::Vertex(2)},
                         sq);
  try {
    check_aleksandrov(t, sq);
    ADD_FAILURE() << "expected IncompleteGluing";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteGluing);
  }
}

TEST(Aleksandrov, UnequalSidesAreALengthMismatch) {
  // Rectangle 2x1 with the two short sides glued to the two long sides.
  PolygonSpec r = rectangle(2, 1);
  GluingTree t;
  t.nodes.push_back(make_node({BoundaryPoint::Vertex(0), BoundaryPoint::Vertex(2)}, r));
  t.nodes.push_back(make_node({BoundaryPoint::Vertex(1)}, r));
  t.nodes.push_back(make_node({BoundaryPoint::Vertex(3)}, r));
  t.arcs = {{0, 1}, {0, 2}};
  try {
    check_aleksandrov(t, r);
    ADD_FAILURE() << "expected LengthMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(Aleksandrov, PerimeterHalvingOfTheTriangle) {
  PolygonSpec tri = equilateral_triangle();
  for (Rational x : {Rational(0), Rational(1, 2), Rational(1, 3), Rational(5, 2)}) {
    HalvingResult h = perimeter_halving(tri, x);
    EXPECT_TRUE(h.report.valid) << to_string(x);
    Shape s = classify_shape(h.tree);
    EXPECT_TRUE(s == Shape::kPath || s == Shape::kY) << to_string(x);
  }
}

TEST(Aleksandrov, ValidityIsInvariantUnderBoundaryRotation) {
  // Rotating the square's labels by one step maps the '+' tree to itself.
  PolygonSpec sq = unit_square();
  GluingTree t = square_plus();
  for (GluingNode& n : t.nodes) {
    for (BoundaryPoint& p : n.points) p.edge_index = (p.edge_index + 1) % 4;
    n = make_node(n.points, sq);
  }
  EXPECT_TRUE(check_aleksandrov(t, sq).valid);
}

TEST(Structural, ItemsOnKnownTrees) {
  ConformanceReport plus = structural_check(square_plus(), unit_square());
  EXPECT_TRUE(plus.item1 && plus.item2 && plus.item3 && plus.item4);
  EXPECT_EQ(plus.fold_leaves, 4);
  EXPECT_EQ(plus.shape, Shape::kPlus);
  ConformanceReport rect = structural_check(fold_rectangle_family(2, 1, Rational(1, 2)),
                                            rectangle(2, 1));
  EXPECT_TRUE(rect.violations.empty());
  EXPECT_EQ(rect.rolling_belts, 2);
  EXPECT_EQ(rect.shape, Shape::kI);
}

TEST(Structural, FiveFoldLeavesViolateItemTwo) {
  // A pentagon with all corners at one node and five folds has angle 3pi,
  // but the structural items are independent of the angle check.
  PolygonSpec p = regular_ngon(5);
  GluingTree t;
  std::vector<BoundaryPoint> corners;
  for (int v = 0; v < 5; ++v) corners.push_back(BoundaryPoint::Vertex(v));
  t.nodes.push_back(make_node(corners, p));
  for (int e = 0; e < 5; ++e) {
    t.nodes.push_back(make_node({mid(p, e)}, p));
    t.arcs.emplace_back(0, e + 1);
  }
  ConformanceReport r = structural_check(t, p);
  EXPECT_FALSE(r.item2);
  EXPECT_FALSE(check_aleksandrov(t, p).valid);
}

TEST(Classify, Shapes) {
  PolygonSpec sq = unit_square();
  GluingTree path;
  path.nodes.push_back(make_node({mid(sq, 0)}, sq));
  path.nodes.push_back(make_node({mid(sq, 2)}, sq));
  path.arcs = {{0, 1}};
  EXPECT_EQ(classify_shape(path), Shape::kPath);
  EXPECT_EQ(classify_shape(square_plus()), Shape::kPlus);
  EXPECT_EQ(classify_shape(fold_rectangle_family(2, 1, Rational(1, 2))), Shape::kI);
  EXPECT_EQ(to_string(Shape::kY), "Y");
  EXPECT_EQ(to_string(Shape::kOther), "Other");
}

}  // namespace
}  // namespace foldtree
