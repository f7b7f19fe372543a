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
#include "foldtree/io.h"
#include "foldtree/polygon.h"

namespace foldtree {
namespace {

Rational turning(const PolygonSpec& p) {
  Rational sum = 0;
  for (const Angle& a : p.angles()) sum += 1 - a.pi_units().exact();
  return sum;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kBadInput;
}

TEST(Polygon, AngleClosureHoldsExactly) {
  EXPECT_EQ(turning(equilateral_triangle()), 2);
  EXPECT_EQ(turning(unit_square()), 2);
  EXPECT_EQ(turning(latin_cross()), 2);
  EXPECT_EQ(turning(u_octagon()), 2);
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(turning(regular_ngon(n)), 2) << n;
  for (int m = 4; m <= 16; m += 2) EXPECT_EQ(turning(m_star(m)), 2) << m;
}

TEST(Polygon, ConvexityOfCatalogShapes) {
  for (int n = 3; n <= 12; ++n) EXPECT_TRUE(is_convex(regular_ngon(n))) << n;
  for (int m = 4; m <= 16; m += 2) EXPECT_FALSE(is_convex(m_star(m))) << m;
  EXPECT_FALSE(is_convex(latin_cross()));
  EXPECT_TRUE(is_convex(rectangle(3, Rational(1, 2))));
}

// Axis-aligned polygons: lengths are Manhattan steps and each turn is a
// quarter turn, so the boundary is known independently of the library.
std::vector<BoundaryItem> rectilinear_boundary(const std::vector<Point2>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<BoundaryItem> items;
  for (int i = 0; i < n; ++i) {
    const Point2& prev = pts[(i + n - 1) % n];
    const Point2& cur = pts[i];
    const Point2& next = pts[(i + 1) % n];
    Rational len = abs(next.x - cur.x) + abs(next.y - cur.y);
    Rational cross = (cur.x - prev.x) * (next.y - cur.y) - (cur.y - prev.y) * (next.x - cur.x);
    Rational angle = cross > 0 ? Rational(1, 2) : cross < 0 ? Rational(3, 2) : Rational(1);
    items.push_back({Length(len), Angle::PiTimes(angle)});
  }
  return items;
}

TEST(Polygon, CoordinatesAgreeWithBoundaryForRectilinearShapes) {
  const std::vector<std::vector<Point2>> shapes = {
      {{0, 0}, {1, 0}, {1, 2}, {2, 2}, {2, 3}, {1, 3}, {1, 4}, {0, 4}, {0, 3}, {-1, 3}, {-1, 2},
       {0, 2}},
      {{0, 0}, {7, 0}, {7, 5}, {5, 5}, {5, 1}, {2, 1}, {2, 5}, {0, 5}},
      {{0, 0}, {3, 0}, {3, Rational(1, 2)}, {0, Rational(1, 2)}},
      {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}};
  for (const auto& pts : shapes) {
    PolygonSpec a = polygon_from_coordinates(pts);
    auto items = rectilinear_boundary(pts);
    PolygonSpec b = polygon_from_boundary(items);
    ASSERT_EQ(a.n(), b.n());
    ASSERT_TRUE(a.exact());
    for (int i = 0; i < a.n(); ++i) {
      EXPECT_EQ(a.exact_length(i), b.exact_length(i));
      EXPECT_EQ(a.angle(i).pi_units().exact(), b.angle(i).pi_units().exact());
    }
  }
}

TEST(Polygon, DiagonalEdgesGetExactLengthsWhenPossible) {
  std::vector<Point2> pts = {{0, 0}, {3, 0}, {3, 4}};
  PolygonSpec p = polygon_from_coordinates(pts);
  EXPECT_TRUE(p.lengths_exact());
  EXPECT_EQ(p.exact_length(1), 4);
  EXPECT_EQ(p.exact_length(2), 5);
  EXPECT_EQ(p.exact_perimeter(), 12);
  std::vector<Point2> right = {{0, 0}, {1, 0}, {0, 1}};
  PolygonSpec q = polygon_from_coordinates(right);
  EXPECT_FALSE(q.lengths_exact());
  EXPECT_EQ(q.angle(1).pi_units().exact(), Rational(1, 4));
}

TEST(Polygon, RejectsBadCoordinates) {
  std::vector<Point2> cw = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  EXPECT_EQ(code_of([&] { polygon_from_coordinates(cw); }), ErrorCode::kClockwiseInput);
  std::vector<Point2> bowtie = {{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  EXPECT_EQ(code_of([&] { polygon_from_coordinates(bowtie); }), ErrorCode::kNonSimple);
  std::vector<Point2> repeat = {{0, 0}, {1, 0}, {1, 0}, {0, 1}};
  EXPECT_EQ(code_of([&] { polygon_from_coordinates(repeat); }), ErrorCode::kDegenerateEdge);
}

TEST(Polygon, RejectsBadBoundary) {
  std::vector<BoundaryItem> zero = {{Length(0), Angle::PiTimes(Rational(1, 3))},
                                    {Length(1), Angle::PiTimes(Rational(1, 3))},
                                    {Length(1), Angle::PiTimes(Rational(1, 3))}};
  EXPECT_EQ(code_of([&] { polygon_from_boundary(zero); }), ErrorCode::kDegenerateEdge);
  std::vector<BoundaryItem> open = {{Length(1), Angle::PiTimes(Rational(1, 2))},
                                    {Length(1), Angle::PiTimes(Rational(1, 2))},
                                    {Length(1), Angle::PiTimes(Rational(1, 2))}};
  EXPECT_EQ(code_of([&] { polygon_from_boundary(open); }), ErrorCode::kAngleClosureViolation);
}

TEST(Polygon, VertexPositionsUnrollAroundTheBoundary) {
  PolygonSpec r = rectangle(2, 1);
  EXPECT_EQ(r.vertex_position(0), 0);
  EXPECT_EQ(r.vertex_position(1), 2);
  EXPECT_EQ(r.vertex_position(3), 5);
  EXPECT_EQ(r.vertex_position(4), 6);
  EXPECT_EQ(r.vertex_position(5), 8);
}

TEST(Polygon, StarLayoutPlacesXAndYOppositeEachOther) {
  StarLayout s = star_layout(4, default_star_alpha(4));
  EXPECT_EQ(s.x, 0);
  EXPECT_EQ(s.y, 5);
  ASSERT_EQ(s.s.size(), 8u);
  EXPECT_EQ(s.s[0], 9);
  EXPECT_EQ(s.s[1], 1);
  EXPECT_EQ(s.s[4], 4);
  EXPECT_EQ(s.s[5], 6);
  PolygonSpec p = m_star(4);
  EXPECT_EQ(p.n(), 10);
  EXPECT_THROW(m_star(5), Error);
}

TEST(Polygon, NamedShapes) {
  EXPECT_EQ(named_shape("triangle").n(), 3);
  EXPECT_EQ(named_shape("square").n(), 4);
  EXPECT_EQ(named_shape("latin-cross").n(), 12);
  EXPECT_EQ(named_shape("star:6").n(), 14);
  EXPECT_EQ(named_shape("ngon:7").n(), 7);
  EXPECT_EQ(named_shape("rect:2,1").exact_perimeter(), 6);
  EXPECT_THROW(named_shape("blob"), Error);
}

}  // namespace
}  // namespace foldtree
