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

#include "foldtree/families.h"

#include <algorithm>
#include <set>

#include "foldtree/error.h"

namespace foldtree {
namespace {

BoundaryPoint point_at(const PolygonSpec& p, Rational pos) {
  const Rational L = p.exact_perimeter();
  while (pos < 0) pos += L;
  while (pos >= L) pos -= L;
  for (int e = 0; e < p.n(); ++e) {
    Rational start = p.vertex_position(e);
    if (pos == start) return BoundaryPoint::Vertex(e);
    if (pos < start + p.exact_length(e)) return BoundaryPoint::Interior(e, AffineExpr(pos - start));
  }
  return BoundaryPoint::Vertex(0);
}

void link_path(GluingTree& t, const std::vector<int>& ids) {
  for (size_t i = 0; i + 1 < ids.size(); ++i) t.arcs.emplace_back(ids[i], ids[i + 1]);
}

}  // namespace

HalvingResult perimeter_halving(const PolygonSpec& p, const Rational& x) {
  if (!p.lengths_exact()) {
    throw Error(ErrorCode::kInexactPolygon, "perimeter halving needs exact lengths");
  }
  const Rational L = p.exact_perimeter();
  if (x < 0 || x >= L) throw Error(ErrorCode::kBadParameter, "offset must lie in [0, L)");
  const Rational half = L / 2;
  std::set<Rational> events;
  for (int turn = -1; turn <= 1; ++turn) {
    for (int v = 0; v < p.n(); ++v) {
      Rational pos = p.vertex_position(v) + L * turn;
      Rational s = pos > x ? Rational(pos - x) : Rational(x - pos);
      if (s > 0 && s < half) events.insert(s);
    }
  }
  GluingTree t;
  std::vector<int> path;
  auto add = [&](std::vector<BoundaryPoint> pts) {
    t.nodes.push_back(make_node(std::move(pts), p));
    path.push_back(t.size() - 1);
  };
  add({point_at(p, x)});
  for (const Rational& s : events) add({point_at(p, x + s), point_at(p, x - s)});
  add({point_at(p, x + half)});
  link_path(t, path);
  HalvingResult r{t, {}};
  r.report = check_aleksandrov(r.tree, p);
  return r;
}

std::vector<bool> parse_bits(const std::string& text) {
  std::vector<bool> bits;
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(ErrorCode::kBadParameter, "bitstring must use 0 and 1");
    bits.push_back(c == '1');
  }
  return bits;
}

StarFamilyResult star_contraction_family(int m, const std::vector<bool>& top_bits,
                                         const std::vector<bool>& bottom_bits) {
  PolygonSpec p = m_star(m);
  StarLayout layout = star_layout(m, default_star_alpha(m));
  const int half = m / 2;
  if (static_cast<int>(top_bits.size()) != half ||
      static_cast<int>(bottom_bits.size()) != half) {
    throw Error(ErrorCode::kBadParameter,
                "star family needs two bitstrings of length " + std::to_string(half));
  }
  StarFamilyResult result;
  if (top_bits[0]) {
    result.reason = "s_1 is adjacent to x and cannot be contracted";
    return result;
  }
  if (bottom_bits[half - 1]) {
    result.reason = "s_" + std::to_string(m + 1) + " is adjacent to y and cannot be contracted";
    return result;
  }
  // Walk each chain from x toward y; a contracted beta hangs as a leaf and
  // its two alpha neighbours merge into one node.
  struct Group {
    std::vector<int> vertices;
    std::vector<int> leaves;
  };
  auto build = [](const std::vector<int>& seq, const std::set<int>& contracted) {
    std::vector<Group> groups;
    for (size_t i = 0; i < seq.size(); ++i) {
      if (contracted.count(static_cast<int>(i))) {
        groups.back().leaves.push_back(seq[i]);
        groups.back().vertices.push_back(seq[i + 1]);
        ++i;
      } else {
        groups.push_back({{seq[i]}, {}});
      }
    }
    return groups;
  };
  std::vector<int> top;
  std::vector<int> bottom{layout.s[0]};
  for (int i = 1; i <= m; ++i) top.push_back(layout.s[i]);
  for (int i = 2 * m - 1; i >= m + 1; --i) bottom.push_back(layout.s[i]);
  std::set<int> top_cut;
  std::set<int> bottom_cut;
  for (int j = 0; j < half; ++j) {
    if (top_bits[j]) top_cut.insert(2 * j);
    if (bottom_bits[j]) bottom_cut.insert(2 * j + 1);
  }
  std::vector<Group> tg = build(top, top_cut);
  std::vector<Group> bg = build(bottom, bottom_cut);
  if (tg.size() != bg.size()) {
    result.reason = "contracted chains have unequal length, so y cannot close as a fold";
    return result;
  }
  GluingTree& t = result.tree;
  auto node = [&](const std::vector<int>& verts) {
    std::vector<BoundaryPoint> pts;
    for (int v : verts) pts.push_back(BoundaryPoint::Vertex(v));
    t.nodes.push_back(make_node(std::move(pts), p));
    return t.size() - 1;
  };
  int prev = node({layout.x});
  for (size_t k = 0; k < tg.size(); ++k) {
    std::vector<int> verts = tg[k].vertices;
    verts.insert(verts.end(), bg[k].vertices.begin(), bg[k].vertices.end());
    int id = node(verts);
    t.arcs.emplace_back(prev, id);
    for (const auto* g : {&tg[k], &bg[k]}) {
      for (int leaf : g->leaves) t.arcs.emplace_back(id, node({leaf}));
    }
    prev = id;
  }
  t.arcs.emplace_back(prev, node({layout.y}));
  for (int i = 0; i < t.size(); ++i) {
    if (compare(t.nodes[i].angle_sum, Scalar(2)) > 0) {
      result.reason = "node " + label_string(t.nodes[i]) + " exceeds 2pi";
      return result;
    }
  }
  try {
    ValidityReport report = check_aleksandrov(t, p);
    result.valid = report.valid;
    if (!report.valid) result.reason = report.problems.empty() ? "invalid" : report.problems.front();
  } catch (const Error& e) {
    result.reason = e.what();
  }
  return result;
}

GluingTree fold_rectangle_family(const Rational& a, const Rational& b, const Rational& t_in) {
  PolygonSpec p = rectangle(a, b);
  if (t_in < 0 || t_in > a + b) {
    throw Error(ErrorCode::kBadParameter, "rectangle family parameter must lie in [0, a + b]");
  }
  Rational t = t_in == a + b ? Rational(0) : t_in;
  // Side 0 puts the moving folds on e1/e3, side 1 on e2/e4.
  const int side = t < a ? 0 : 1;
  const Rational len = side == 0 ? a : b;
  const Rational off = side == 0 ? t : Rational(t - a);
  const int e = side;
  const int f = side + 2;
  GluingTree tree;
  auto node = [&](std::vector<BoundaryPoint> pts) {
    tree.nodes.push_back(make_node(std::move(pts), p));
    return tree.size() - 1;
  };
  auto mid = [&](int edge) { return BoundaryPoint::Interior(edge, AffineExpr(len / 2)); };
  if (off == 0) {
    int f1 = node({mid(e)});
    int n1 = node({BoundaryPoint::Vertex(e), BoundaryPoint::Vertex(e + 1)});
    int n2 = node({BoundaryPoint::Vertex(f), BoundaryPoint::Vertex((f + 1) % 4)});
    int f2 = node({mid(f)});
    link_path(tree, {f1, n1, n2, f2});
    return tree;
  }
  const ParamId s = 0;
  const ParamId u = 1;
  AffineExpr ps = AffineExpr::Param(s);
  AffineExpr pu = AffineExpr::Param(u);
  tree.region.add_parameter(s);
  tree.region.add_parameter(u);
  tree.region.add(ps, true);
  tree.region.add(AffineExpr(len) - ps, true);
  tree.region.add(pu, true);
  tree.region.add(AffineExpr(len) - pu, true);
  int n1 = node({BoundaryPoint::Vertex(e), BoundaryPoint::Interior(e, ps),
                 BoundaryPoint::Vertex(e + 1)});
  int n2 = node({BoundaryPoint::Vertex(f), BoundaryPoint::Interior(f, pu),
                 BoundaryPoint::Vertex((f + 1) % 4)});
  int a1 = node({BoundaryPoint::Interior(e, ps * Rational(1, 2))});
  int a2 = node({BoundaryPoint::Interior(e, (ps + AffineExpr(len)) * Rational(1, 2))});
  int b1 = node({BoundaryPoint::Interior(f, pu * Rational(1, 2))});
  int b2 = node({BoundaryPoint::Interior(f, (pu + AffineExpr(len)) * Rational(1, 2))});
  tree.arcs = {{a1, n1}, {a2, n1}, {n1, n2}, {n2, b1}, {n2, b2}};
  tree.region.pin_representative({{s, off}, {u, off}});
  tree.belts = find_rolling_belts(tree);
  return tree;
}

std::map<int, int> leaf_census(std::span<const GluingTree> trees) {
  std::map<int, int> hist;
  for (const GluingTree& t : trees) ++hist[t.leaf_count()];
  return hist;
}

}  // namespace foldtree
