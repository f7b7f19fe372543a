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

#pragma once

#include <span>
#include <string>
#include <vector>

#include "foldtree/scalar.h"

namespace foldtree {

struct Point2 {
  Rational x;
  Rational y;
  bool operator==(const Point2&) const = default;
};

struct BoundaryItem {
  Length length;  // edge leaving the vertex
  Angle angle;    // interior angle at the vertex
};

// Intrinsic boundary of a simple polygon. Vertex v_i sits between edges
// e_{i-1} and e_i, and edge e_i runs from v_i to v_{i+1}, counterclockwise.
class PolygonSpec {
 public:
  PolygonSpec() = default;
  PolygonSpec(std::vector<Length> lengths, std::vector<Angle> angles);

  int n() const { return static_cast<int>(lengths_.size()); }
  const Length& length(int edge) const { return lengths_[wrap(edge)]; }
  const Angle& angle(int vertex) const { return angles_[wrap(vertex)]; }
  const std::vector<Length>& lengths() const { return lengths_; }
  const std::vector<Angle>& angles() const { return angles_; }
  const Length& perimeter() const { return perimeter_; }

  bool lengths_exact() const;
  bool angles_exact() const;
  bool exact() const { return lengths_exact() && angles_exact(); }

  // Exact arc-length position of v_i measured from v_0.
  Rational vertex_position(int vertex) const;
  const Rational& exact_length(int edge) const {
    return length(edge).exact();
  }
  const Rational& exact_perimeter() const { return perimeter_.exact(); }

  const std::vector<Point2>& coordinates() const { return coordinates_; }
  void set_coordinates(std::vector<Point2> pts) { coordinates_ = std::move(pts); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int wrap(int i) const {
    int m = i % n();
    return m < 0 ? m + n() : m;
  }

 private:
  std::vector<Length> lengths_;
  std::vector<Angle> angles_;
  Length perimeter_;
  std::vector<Point2> coordinates_;
  std::string name_;
};

PolygonSpec polygon_from_coordinates(std::span<const Point2> pts,
                                     double eps = kDefaultEpsilon);
PolygonSpec polygon_from_boundary(std::span<const BoundaryItem> items,
                                  double eps = kDefaultEpsilon);

bool is_convex(const PolygonSpec& p, double eps = kDefaultEpsilon);

PolygonSpec equilateral_triangle();
PolygonSpec unit_square();
PolygonSpec rectangle(const Rational& a, const Rational& b);
PolygonSpec regular_ngon(int n);
PolygonSpec latin_cross();

// Vertex layout of the m-star: v_0 = x, v_1..v_m = s_1..s_m, v_{m+1} = y,
// v_{m+2}..v_{2m} = s_{m+1}..s_{2m-1}, v_{2m+1} = s_0.
struct StarLayout {
  int m = 0;
  int x = 0;
  int y = 0;
  std::vector<int> s;  // s[i] is the vertex index of star vertex s_i
  Rational alpha;      // in units of pi
  Rational beta;
};
StarLayout star_layout(int m, const Rational& alpha_pi);
Rational default_star_alpha(int m);
PolygonSpec m_star(int m);
PolygonSpec m_star(int m, const Rational& alpha_pi);

}  // namespace foldtree
