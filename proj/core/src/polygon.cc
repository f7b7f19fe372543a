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

#include "foldtree/polygon.h"

#include <cmath>
#include <numbers>

#include "foldtree/error.h"

namespace foldtree {
namespace {

struct Vec {
  Rational x;
  Rational y;
};

Vec sub(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Rational cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

int sign(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

int orient(const Point2& a, const Point2& b, const Point2& c) {
  return sign(cross(sub(b, a), sub(c, a)));
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_touch(const Point2& a, const Point2& b, const Point2& c,
                    const Point2& d) {
  int o1 = orient(a, b, c);
  int o2 = orient(a, b, d);
  int o3 = orient(c, d, a);
  int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

// Interior angle at a vertex given incoming and outgoing edge directions.
// Multiples of pi/4 are recognized exactly.
Angle interior_angle(const Vec& in, const Vec& out) {
  Rational c = cross(in, out);
  Rational d = dot(in, out);
  auto turn_to_angle = [](const Rational& turn) {
    return Angle::PiTimes(Rational(1) - turn);
  };
  if (c == 0) return turn_to_angle(Rational(0));
  if (d == 0) return turn_to_angle(c > 0 ? Rational(1, 2) : Rational(-1, 2));
  if (abs(c) == abs(d)) {
    Rational q = d > 0 ? Rational(1, 4) : Rational(3, 4);
    return turn_to_angle(c > 0 ? q : Rational(-q));
  }
  double turn = std::atan2(to_double(c), to_double(d));
  return Angle(Scalar::Approx(1.0 - turn / std::numbers::pi));
}

void check_closure(const std::vector<Angle>& angles, double eps) {
  Scalar total;
  for (const Angle& a : angles) total += a.pi_units();
  Scalar expected = Scalar(static_cast<int>(angles.size()) - 2);
  if (compare(total, expected, eps) != 0) {
    throw Error(ErrorCode::kAngleClosureViolation,
                "turning angles sum to " + (Scalar(static_cast<int>(angles.size())) - total).to_string() +
                    "pi, expected 2pi");
  }
}

}  // namespace

PolygonSpec::PolygonSpec(std::vector<Length> lengths, std::vector<Angle> angles)
    : lengths_(std::move(lengths)), angles_(std::move(angles)) {
  for (const Length& l : lengths_) perimeter_ += l;
}

bool PolygonSpec::lengths_exact() const {
  for (const Length& l : lengths_)
    if (!l.is_exact()) return false;
  return true;
}

bool PolygonSpec::angles_exact() const {
  for (const Angle& a : angles_)
    if (!a.is_exact()) return false;
  return true;
}

Rational PolygonSpec::vertex_position(int vertex) const {
  int turns = vertex >= 0 ? vertex / n() : -((-vertex + n() - 1) / n());
  int base = vertex - turns * n();
  Rational pos = exact_perimeter() * turns;
  for (int i = 0; i < base; ++i) pos += exact_length(i);
  return pos;
}

PolygonSpec polygon_from_coordinates(std::span<const Point2> pts, double eps) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw Error(ErrorCode::kBadInput, "need at least 3 points");
  for (int i = 0; i < n; ++i) {
    if (pts[i] == pts[(i + 1) % n]) {
      throw Error(ErrorCode::kDegenerateEdge,
                  "edge " + std::to_string(i + 1) + " has zero length");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (pts[i] == pts[j]) {
        throw Error(ErrorCode::kNonSimple, "repeated point");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    for (int j = i + 1; j < n; ++j) {
      const Point2& c = pts[j];
      const Point2& d = pts[(j + 1) % n];
      bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        Vec u = sub(b, a);
        Vec v = sub(d, c);
        if (cross(u, v) == 0 && dot(u, v) < 0) {
          throw Error(ErrorCode::kNonSimple, "boundary folds back on itself");
        }
        continue;
      }
      if (segments_touch(a, b, c, d)) {
        throw Error(ErrorCode::kNonSimple,
                    "edges " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " intersect");
      }
    }
  }
  Rational area2 = 0;
  for (int i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    area2 += a.x * b.y - b.x * a.y;
  }
  if (area2 < 0) {
    throw Error(ErrorCode::kClockwiseInput, "points are clockwise");
  }
  if (area2 == 0) throw Error(ErrorCode::kNonSimple, "zero area");

  std::vector<Length> lengths;
  std::vector<Angle> angles;
  for (int i = 0; i < n; ++i) {
    Vec e = sub(pts[(i + 1) % n], pts[i]);
    Rational sq = dot(e, e);
    Rational root;
    if (exact_sqrt(sq, &root)) {
      lengths.emplace_back(root);
    } else {
      lengths.push_back(Scalar::Approx(std::sqrt(to_double(sq))));
    }
    Vec in = sub(pts[i], pts[(i + n - 1) % n]);
    angles.push_back(interior_angle(in, e));
  }
  check_closure(angles, eps);
  PolygonSpec p(std::move(lengths), std::move(angles));
  p.set_coordinates(std::vector<Point2>(pts.begin(), pts.end()));
  return p;
}

PolygonSpec polygon_from_boundary(std::span<const BoundaryItem> items,
                                  double eps) {
  if (items.size() < 3) throw Error(ErrorCode::kBadInput, "need at least 3 vertices");
  std::vector<Length> lengths;
  std::vector<Angle> angles;
  for (const BoundaryItem& item : items) {
    if (compare(item.length, Scalar(0), 0.0) <= 0) {
      throw Error(ErrorCode::kDegenerateEdge, "edge length must be positive");
    }
    const Scalar& a = item.angle.pi_units();
    if (compare(a, Scalar(0), 0.0) <= 0 || compare(a, Scalar(2), 0.0) >= 0) {
      throw Error(ErrorCode::kBadInput, "vertex angle must lie in (0, 2pi)");
    }
    lengths.push_back(item.length);
    angles.push_back(item.angle);
  }
  check_closure(angles, eps);
  return PolygonSpec(std::move(lengths), std::move(angles));
}

bool is_convex(const PolygonSpec& p, double eps) {
  for (const Angle& a : p.angles()) {
    if (compare(a.pi_units(), Scalar(1), eps) > 0) return false;
  }
  return true;
}

PolygonSpec rectangle(const Rational& a, const Rational& b) {
  if (a <= 0 || b <= 0) {
    throw Error(ErrorCode::kBadParameter, "rectangle sides must be positive");
  }
  std::vector<BoundaryItem> items;
  for (int i = 0; i < 4; ++i) {
    items.push_back({Length(i % 2 == 0 ? a : b), Angle::PiTimes(Rational(1, 2))});
  }
  PolygonSpec p = polygon_from_boundary(items);
  p.set_coordinates({{0, 0}, {a, 0}, {a, b}, {0, b}});
  p.set_name(a == b && a == 1 ? "square" : "rect:" + to_string(a) + "," + to_string(b));
  return p;
}

PolygonSpec unit_square() { return rectangle(1, 1); }

PolygonSpec regular_ngon(int n) {
  if (n < 3) throw Error(ErrorCode::kBadParameter, "regular polygon needs n >= 3");
  std::vector<BoundaryItem> items(
      n, BoundaryItem{Length(1), Angle::PiTimes(Rational(n - 2, n))});
  PolygonSpec p = polygon_from_boundary(items);
  p.set_name(n == 3 ? "triangle" : "ngon:" + std::to_string(n));
  return p;
}

PolygonSpec equilateral_triangle() { return regular_ngon(3); }

PolygonSpec latin_cross() {
  const std::vector<Point2> pts = {{0, 0},  {1, 0},  {1, 2},  {2, 2},
                                   {2, 3},  {1, 3},  {1, 4},  {0, 4},
                                   {0, 3},  {-1, 3}, {-1, 2}, {0, 2}};
  PolygonSpec p = polygon_from_coordinates(pts);
  p.set_name("latin-cross");
  return p;
}

Rational default_star_alpha(int m) { return Rational(1, m * (m - 1)); }

StarLayout star_layout(int m, const Rational& alpha_pi) {
  if (m < 4 || m % 2 != 0) {
    throw Error(ErrorCode::kBadParameter, "m-star needs even m >= 4");
  }
  StarLayout s;
  s.m = m;
  s.x = 0;
  s.y = m + 1;
  s.s.resize(2 * m);
  s.s[0] = 2 * m + 1;
  for (int i = 1; i <= m; ++i) s.s[i] = i;
  for (int i = m + 1; i <= 2 * m - 1; ++i) s.s[i] = i + 1;
  s.alpha = alpha_pi;
  s.beta = Rational(2 * m - 2, m) - alpha_pi;
  return s;
}

PolygonSpec m_star(int m, const Rational& alpha_pi) {
  StarLayout layout = star_layout(m, alpha_pi);
  if (alpha_pi <= 0 || layout.beta >= 2) {
    throw Error(ErrorCode::kBadParameter, "star angle out of range");
  }
  const int n = 2 * m + 2;
  std::vector<Angle> angles(n);
  angles[layout.x] = Angle::PiTimes(1);
  angles[layout.y] = Angle::PiTimes(1);
  for (int i = 0; i < 2 * m; ++i) {
    angles[layout.s[i]] = Angle::PiTimes(i % 2 == 0 ? layout.alpha : layout.beta);
  }
  // x and y bisect the edges s_0 s_1 and s_m s_{m+1}.
  std::vector<BoundaryItem> items(n);
  for (int v = 0; v < n; ++v) {
    bool half = v == layout.x || v == layout.y || v == layout.s[m] ||
                v == layout.s[0];
    items[v] = {Length(half ? Rational(1, 2) : Rational(1)), angles[v]};
  }
  PolygonSpec p = polygon_from_boundary(items);
  p.set_name("star:" + std::to_string(m));
  return p;
}

PolygonSpec m_star(int m) {
  if (m < 4 || m % 2 != 0) {
    throw Error(ErrorCode::kBadParameter, "m-star needs even m >= 4");
  }
  return m_star(m, default_star_alpha(m));
}

}  // namespace foldtree
