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

#include "foldtree/unfold.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "foldtree/error.h"

namespace foldtree {
namespace {

struct Vec3 {
  double x = 0;
  double y = 0;
  double z = 0;
};

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 scaled(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }

Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
double cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double dot2(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
double len2(const Vec2& a) { return std::hypot(a.x, a.y); }

using Edge = std::pair<int, int>;
Edge key(int a, int b) { return std::minmax(a, b); }

std::vector<Vec3> surface_points(const Frustum& f) {
  std::vector<Vec3> pts(2 * f.k + 1);
  const double rb = to_double(f.r_bottom);
  const double rt = to_double(f.r_top);
  const double h = to_double(f.height);
  for (int i = 0; i < f.k; ++i) {
    double th = 2 * std::numbers::pi * i / f.k;
    pts[bottom_vertex(f, i)] = {rb * std::cos(th), rb * std::sin(th), 0};
    pts[top_vertex(f, i)] = {rt * std::cos(th), rt * std::sin(th), h};
  }
  pts[top_center(f)] = {0, 0, h};
  return pts;
}

bool uses_center(const Frustum& f, const CutTree& t) {
  for (const CutSegment& s : t.segments)
    if (s.a == top_center(f) || s.b == top_center(f)) return true;
  return false;
}

// Faces as counterclockwise cycles seen from outside.
std::vector<std::vector<int>> base_faces(const Frustum& f, bool fan_top) {
  std::vector<std::vector<int>> faces;
  std::vector<int> bottom;
  for (int i = 0; i < f.k; ++i) bottom.push_back(bottom_vertex(f, -i));
  faces.push_back(bottom);
  for (int i = 0; i < f.k; ++i) {
    faces.push_back({bottom_vertex(f, i), bottom_vertex(f, i + 1), top_vertex(f, i + 1),
                     top_vertex(f, i)});
  }
  if (fan_top) {
    for (int i = 0; i < f.k; ++i)
      faces.push_back({top_center(f), top_vertex(f, i), top_vertex(f, i + 1)});
  } else {
    std::vector<int> top;
    for (int i = 0; i < f.k; ++i) top.push_back(top_vertex(f, i));
    faces.push_back(top);
  }
  return faces;
}

std::set<Edge> face_edges(const std::vector<std::vector<int>>& faces) {
  std::set<Edge> edges;
  for (const auto& face : faces)
    for (size_t i = 0; i < face.size(); ++i)
      edges.insert(key(face[i], face[(i + 1) % face.size()]));
  return edges;
}

// Splits faces along chords between two of their corners. Returns false when
// some segment is neither an edge nor a chord of a single face.
bool split_faces(std::vector<std::vector<int>>& faces, const CutTree& t,
                 std::vector<std::string>* problems) {
  bool ok = true;
  for (const CutSegment& s : t.segments) {
    if (face_edges(faces).count(key(s.a, s.b))) continue;
    bool done = false;
    for (size_t fi = 0; fi < faces.size() && !done; ++fi) {
      auto& face = faces[fi];
      auto ia = std::find(face.begin(), face.end(), s.a);
      auto ib = std::find(face.begin(), face.end(), s.b);
      if (ia == face.end() || ib == face.end()) continue;
      size_t i = ia - face.begin();
      size_t j = ib - face.begin();
      if (i > j) std::swap(i, j);
      std::vector<int> first(face.begin() + i, face.begin() + j + 1);
      std::vector<int> second(face.begin() + j, face.end());
      second.insert(second.end(), face.begin(), face.begin() + i + 1);
      face = first;
      faces.push_back(second);
      done = true;
    }
    if (!done) {
      ok = false;
      if (problems) problems->push_back("segment does not lie in a single face");
    }
  }
  return ok;
}

double polygon_area(const std::vector<Vec2>& pts) {
  double a = 0;
  for (size_t i = 0; i < pts.size(); ++i) a += cross2(pts[i], pts[(i + 1) % pts.size()]);
  return a / 2;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  Vec2 ab = b - a;
  double l = dot2(ab, ab);
  double s = l == 0 ? 0 : std::clamp(dot2(p - a, ab) / l, 0.0, 1.0);
  return len2(p - (a + Vec2{ab.x * s, ab.y * s}));
}

bool segments_meet(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d, double tol) {
  double o1 = cross2(b - a, c - a);
  double o2 = cross2(b - a, d - a);
  double o3 = cross2(d - c, a - c);
  double o4 = cross2(d - c, b - c);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0)))
    return true;
  return point_segment_distance(a, c, d) <= tol || point_segment_distance(b, c, d) <= tol ||
         point_segment_distance(c, a, b) <= tol || point_segment_distance(d, a, b) <= tol;
}

}  // namespace

void validate_frustum(const Frustum& f) {
  if (f.k < 3) throw Error(ErrorCode::kBadParameter, "frustum needs k >= 3");
  if (!(f.r_bottom > f.r_top && f.r_top > 0)) {
    throw Error(ErrorCode::kBadParameter, "need r_bottom > r_top > 0");
  }
  if (f.height <= 0) throw Error(ErrorCode::kBadParameter, "height must be positive");
}

std::string surface_point_name(const Frustum& f, int id) {
  if (id == top_center(f)) return "c";
  if (id < f.k) return "B" + std::to_string(id);
  return "T" + std::to_string(id - f.k);
}

CutTree volcano_cut_tree(const Frustum& f, const std::vector<bool>& bits) {
  validate_frustum(f);
  if (static_cast<int>(bits.size()) != f.k - 1) {
    throw Error(ErrorCode::kBadParameter,
                "bitstring must have length " + std::to_string(f.k - 1));
  }
  CutTree t;
  t.k = f.k;
  t.bits = bits;
  for (int i = 0; i < f.k; ++i) {
    bool diagonal = i >= 1 && bits[i - 1];
    t.segments.push_back({bottom_vertex(f, i), top_vertex(f, diagonal ? i + 1 : i)});
  }
  for (int i = 1; i < f.k; ++i) t.segments.push_back({top_vertex(f, i), top_vertex(f, i + 1)});
  CutTreeReport report = validate_cut_tree(f, t);
  if (!report.item1 || !report.item2 || !report.item3) {
    throw Error(ErrorCode::kNotATree, "cut tree construction failed for bits " + bit_string(t));
  }
  return t;
}

CutTree volcano_cut_tree(const Frustum& f, const std::string& bitstring) {
  std::vector<bool> bits;
  for (auto it = bitstring.rbegin(); it != bitstring.rend(); ++it) {
    if (*it != '0' && *it != '1') throw Error(ErrorCode::kBadParameter, "bits must be 0 or 1");
    bits.push_back(*it == '1');
  }
  return volcano_cut_tree(f, bits);
}

std::string bit_string(const CutTree& t) {
  std::string s;
  for (auto it = t.bits.rbegin(); it != t.bits.rend(); ++it) s += *it ? '1' : '0';
  return s;
}

Development develop(const Frustum& f, const CutTree& t) {
  validate_frustum(f);
  const std::vector<Vec3> pts = surface_points(f);
  std::vector<std::vector<int>> faces = base_faces(f, uses_center(f, t));
  if (!split_faces(faces, t, nullptr)) {
    throw Error(ErrorCode::kBadInput, "cut segment leaves the surface");
  }
  std::set<Edge> cut;
  Development dev;
  for (const CutSegment& s : t.segments) {
    cut.insert(key(s.a, s.b));
    dev.cut_length += norm(pts[s.a] - pts[s.b]);
  }
  // Half-edge lookup: directed edge (a, b) -> face holding it.
  std::map<Edge, int> owner;
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const auto& face = faces[fi];
    for (size_t i = 0; i < face.size(); ++i)
      owner[{face[i], face[(i + 1) % face.size()]}] = static_cast<int>(fi);
  }
  // Local planar frames.
  std::vector<std::vector<Vec2>> local(faces.size());
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const auto& face = faces[fi];
    Vec3 normal;
    for (size_t i = 0; i < face.size(); ++i) {
      Vec3 c = cross(pts[face[i]], pts[face[(i + 1) % face.size()]]);
      normal = {normal.x + c.x, normal.y + c.y, normal.z + c.z};
    }
    normal = scaled(normal, 1 / norm(normal));
    Vec3 o = pts[face[0]];
    Vec3 u = pts[face[1]] - o;
    u = scaled(u, 1 / norm(u));
    Vec3 w = cross(normal, u);
    for (int id : face) {
      Vec3 d = pts[id] - o;
      local[fi].push_back({dot(d, u), dot(d, w)});
    }
    dev.surface_area += polygon_area(local[fi]);
  }
  // Place faces outward from the bottom across uncut edges.
  std::vector<std::vector<Vec2>> placed(faces.size());
  std::vector<bool> done(faces.size(), false);
  placed[0] = local[0];
  done[0] = true;
  std::queue<int> queue;
  queue.push(0);
  while (!queue.empty()) {
    int fi = queue.front();
    queue.pop();
    const auto& face = faces[fi];
    for (size_t i = 0; i < face.size(); ++i) {
      int a = face[i];
      int b = face[(i + 1) % face.size()];
      if (cut.count(key(a, b))) continue;
      auto it = owner.find({b, a});
      if (it == owner.end()) continue;
      int gi = it->second;
      if (done[gi]) continue;
      const auto& g = faces[gi];
      size_t ga = std::find(g.begin(), g.end(), a) - g.begin();
      size_t gb = std::find(g.begin(), g.end(), b) - g.begin();
      Vec2 fa = placed[fi][i];
      Vec2 fb = placed[fi][(i + 1) % face.size()];
      Vec2 la = local[gi][ga];
      Vec2 lb = local[gi][gb];
      double phi = std::atan2((fb - fa).y, (fb - fa).x) - std::atan2((lb - la).y, (lb - la).x);
      double c = std::cos(phi);
      double s = std::sin(phi);
      for (const Vec2& p : local[gi]) {
        Vec2 d = p - la;
        placed[gi].push_back({fa.x + c * d.x - s * d.y, fa.y + s * d.x + c * d.y});
      }
      done[gi] = true;
      queue.push(gi);
    }
  }
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    if (!done[fi]) throw Error(ErrorCode::kNotATree, "cut tree disconnects the surface");
    const auto& face = faces[fi];
    for (size_t i = 0; i < face.size(); ++i) {
      size_t j = (i + 1) % face.size();
      double want = norm(pts[face[j]] - pts[face[i]]);
      double got = len2(placed[fi][j] - placed[fi][i]);
      dev.isometry_error = std::max(dev.isometry_error, std::abs(want - got));
    }
  }
  dev.faces = placed;

  // Trace the boundary of the cut surface.
  std::vector<std::pair<int, int>> half_edges;  // (face, index) of cut half-edges
  for (size_t fi = 0; fi < faces.size(); ++fi)
    for (size_t i = 0; i < faces[fi].size(); ++i)
      if (cut.count(key(faces[fi][i], faces[fi][(i + 1) % faces[fi].size()])))
        half_edges.emplace_back(static_cast<int>(fi), static_cast<int>(i));
  if (!half_edges.empty()) {
    auto [fi, i] = half_edges.front();
    const auto start = half_edges.front();
    for (size_t guard = 0; guard <= half_edges.size(); ++guard) {
      const auto& face = faces[fi];
      dev.boundary.vertices.push_back(placed[fi][i]);
      dev.boundary.sources.push_back(face[i]);
      // Rotate about the end point until the next cut half-edge.
      int cf = fi;
      int ci = (i + 1) % static_cast<int>(face.size());
      for (;;) {
        const auto& cface = faces[cf];
        int a = cface[ci];
        int b = cface[(ci + 1) % cface.size()];
        if (cut.count(key(a, b))) break;
        int gi = owner.at({b, a});
        const auto& g = faces[gi];
        int gb = static_cast<int>(std::find(g.begin(), g.end(), b) - g.begin());
        cf = gi;
        ci = (gb + 1) % static_cast<int>(g.size());
      }
      fi = cf;
      i = ci;
      if (std::make_pair(fi, i) == start) break;
    }
  }
  const auto& bv = dev.boundary.vertices;
  for (size_t i = 0; i < bv.size(); ++i) dev.boundary_length += len2(bv[(i + 1) % bv.size()] - bv[i]);
  dev.developed_area = polygon_area(bv);
  const double tol = 1e-9 * to_double(f.r_bottom);
  dev.simple = bv.size() == 2 * t.segments.size() && is_simple(dev.boundary, tol) &&
               std::abs(dev.developed_area - dev.surface_area) <= 1e-7 * dev.surface_area;
  return dev;
}

bool is_simple(const PlanarPolygon& poly, double tol) {
  const auto& v = poly.vertices;
  const size_t n = v.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (len2(v[i] - v[j]) <= tol) return false;
    }
  }
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    for (size_t j = i + 1; j < n; ++j) {
      const Vec2& c = v[j];
      const Vec2& d = v[(j + 1) % n];
      if (j == i + 1 || (i == 0 && j == n - 1)) {
        // Adjacent edges may only share their common corner.
        const Vec2& shared = j == i + 1 ? b : a;
        const Vec2& p = j == i + 1 ? a : b;
        const Vec2& q = j == i + 1 ? d : c;
        Vec2 u = p - shared;
        Vec2 w = q - shared;
        if (std::abs(cross2(u, w)) <= tol * (len2(u) + len2(w)) && dot2(u, w) > 0) return false;
        continue;
      }
      if (segments_meet(a, b, c, d, tol)) return false;
    }
  }
  return true;
}

PlanarPolygon unfold(const Frustum& f, const CutTree& t) {
  Development dev = develop(f, t);
  if (!dev.simple) {
    throw Error(ErrorCode::kNonSimpleUnfolding,
                "unfolding for bits " + bit_string(t) + " overlaps itself");
  }
  return dev.boundary;
}

CutTreeReport validate_cut_tree(const Frustum& f, const CutTree& t) {
  CutTreeReport r;
  const int vertices = 2 * f.k;
  std::map<int, int> degree;
  std::set<Edge> seen;
  for (const CutSegment& s : t.segments) {
    if (s.a == s.b || s.a < 0 || s.b < 0 || s.a > top_center(f) || s.b > top_center(f)) {
      r.item5 = false;
      r.violations.push_back("segment with invalid endpoints");
      continue;
    }
    if (!seen.insert(key(s.a, s.b)).second) {
      r.item1 = false;
      r.violations.push_back("repeated segment");
    }
    ++degree[s.a];
    ++degree[s.b];
  }
  // Item 1: connected and acyclic.
  std::map<int, int> parent;
  for (auto& [id, d] : degree) parent[id] = id;
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  int components = static_cast<int>(degree.size());
  for (const CutSegment& s : t.segments) {
    if (!parent.count(s.a) || !parent.count(s.b)) continue;
    int ra = find(s.a);
    int rb = find(s.b);
    if (ra == rb) {
      r.item1 = false;
    } else {
      parent[ra] = rb;
      --components;
    }
  }
  if (components != 1 || t.segments.size() + 1 != degree.size()) r.item1 = false;
  if (!r.item1) r.violations.push_back("cut segments do not form a tree");
  for (int v = 0; v < vertices; ++v) {
    if (!degree.count(v)) {
      r.item2 = false;
      r.violations.push_back("vertex " + surface_point_name(f, v) + " is not on the cut tree");
    }
  }
  for (const auto& [id, d] : degree) {
    if (d == 1 && id >= vertices) {
      r.item3 = false;
      r.violations.push_back("leaf " + surface_point_name(f, id) + " is not a vertex");
    }
  }
  std::vector<std::vector<int>> faces = base_faces(f, uses_center(f, t));
  std::vector<std::string> problems;
  if (!split_faces(faces, t, &problems)) {
    r.item5 = false;
    r.violations.insert(r.violations.end(), problems.begin(), problems.end());
  }
  if (r.item1 && r.item5) {
    Development dev = develop(f, t);
    std::map<int, int> visits;
    for (int src : dev.boundary.sources) ++visits[src];
    for (const auto& [id, d] : degree) {
      if (visits[id] != d) {
        r.item4 = false;
        r.violations.push_back("point " + surface_point_name(f, id) + " of degree " +
                               std::to_string(d) + " has " + std::to_string(visits[id]) +
                               " boundary preimages");
      }
    }
  } else {
    r.item4 = false;
  }
  return r;
}

Signature congruence_signature(const PlanarPolygon& poly) {
  const auto& v = poly.vertices;
  const size_t n = v.size();
  std::vector<Vec2> corners;
  for (size_t i = 0; i < n; ++i) {
    Vec2 in = v[i] - v[(i + n - 1) % n];
    Vec2 out = v[(i + 1) % n] - v[i];
    double turn = std::atan2(cross2(in, out), dot2(in, out));
    if (std::abs(turn) > 1e-9) corners.push_back(v[i]);
  }
  Signature sig;
  const size_t m = corners.size();
  for (size_t i = 0; i < m; ++i) {
    Vec2 a = corners[i];
    Vec2 b = corners[(i + 1) % m];
    Vec2 c = corners[(i + 2) % m];
    double turn = std::atan2(cross2(b - a, c - b), dot2(b - a, c - b));
    sig.items.emplace_back(len2(b - a), turn);
  }
  return sig;
}

bool congruent(const Signature& a, const Signature& b, double tol) {
  const size_t m = a.items.size();
  if (m != b.items.size()) return false;
  if (m == 0) return true;
  auto close = [tol](const std::pair<double, double>& x, const std::pair<double, double>& y) {
    return std::abs(x.first - y.first) <= tol && std::abs(x.second - y.second) <= tol;
  };
  for (size_t r = 0; r < m; ++r) {
    bool same = true;
    for (size_t j = 0; j < m && same; ++j) same = close(a.items[j], b.items[(j + r) % m]);
    if (same) return true;
    bool mirrored = true;
    for (size_t j = 0; j < m && mirrored; ++j) {
      // Reversed traversal of the mirror image.
      const auto& len_item = b.items[(r + m - j) % m];
      const auto& turn_item = b.items[(r + 2 * m - j - 1) % m];
      mirrored = close(a.items[j], {len_item.first, turn_item.second});
    }
    if (mirrored) return true;
  }
  return false;
}

UnfoldingCensus distinct_unfoldings(const Frustum& f) {
  validate_frustum(f);
  UnfoldingCensus census;
  const int bits = f.k - 1;
  for (int code = 0; code < (1 << bits); ++code) {
    std::vector<bool> b(bits);
    for (int i = 0; i < bits; ++i) b[i] = (code >> i) & 1;
    CutTree t = volcano_cut_tree(f, b);
    Development dev = develop(f, t);
    ++census.total;
    if (!dev.simple || !validate_cut_tree(f, t).ok()) {
      census.non_simple.push_back(bit_string(t));
      continue;
    }
    ++census.simple;
    census.signatures.push_back(congruence_signature(dev.boundary));
  }
  std::vector<int> reps;
  for (size_t i = 0; i < census.signatures.size(); ++i) {
    bool fresh = true;
    for (int r : reps) {
      if (congruent(census.signatures[i], census.signatures[r])) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(static_cast<int>(i));
  }
  census.distinct = static_cast<int>(reps.size());
  return census;
}

std::string to_svg(const PlanarPolygon& poly, const Frustum& f) {
  const double unit = to_double(f.r_bottom) / 2;
  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (const Vec2& p : poly.vertices) {
    minx = std::min(minx, p.x / unit);
    maxx = std::max(maxx, p.x / unit);
    miny = std::min(miny, -p.y / unit);
    maxy = std::max(maxy, -p.y / unit);
  }
  const double pad = 0.5;
  std::ostringstream out;
  out.precision(6);
  out << std::fixed;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << minx - pad << " "
      << miny - pad << " " << (maxx - minx) + 2 * pad << " " << (maxy - miny) + 2 * pad
      << "\" width=\"600\" height=\"600\">\n";
  out << "  <path fill=\"#dde\" stroke=\"black\" stroke-width=\"0.02\" d=\"";
  for (size_t i = 0; i < poly.vertices.size(); ++i) {
    out << (i == 0 ? "M " : " L ") << poly.vertices[i].x / unit << " "
        << -poly.vertices[i].y / unit;
  }
  out << " Z\"/>\n</svg>\n";
  return out.str();
}

}  // namespace foldtree
