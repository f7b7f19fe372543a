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

#include "foldtree/gluing_tree.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "foldtree/error.h"

namespace foldtree {
namespace {

using Row = std::vector<Rational>;

std::vector<ParamId> collect_params(const GluingTree& t) {
  std::set<ParamId> ids(t.region.parameters().begin(), t.region.parameters().end());
  for (const GluingNode& node : t.nodes)
    for (const BoundaryPoint& pt : node.points)
      for (const auto& term : pt.offset.terms()) ids.insert(term.first);
  return {ids.begin(), ids.end()};
}

Row gradient(const AffineExpr& e, const std::vector<ParamId>& params) {
  Row r;
  for (ParamId p : params) r.push_back(e.coefficient(p));
  return r;
}

int rank(std::vector<Row> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows.front().size();
  int r = 0;
  for (size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::vector<int> tree_path(const std::vector<std::vector<int>>& adj, int from,
                           int to) {
  std::vector<int> parent(adj.size(), -1);
  std::vector<int> stack{from};
  parent[from] = from;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (parent[w] < 0) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  if (parent[to] < 0) return {};
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::string ElementId::to_string() const {
  return (kind == ElementKind::kVertex ? "v" : "e") + std::to_string(index + 1);
}

ElementId BoundaryPoint::element() const {
  return {is_vertex() ? ElementKind::kVertex : ElementKind::kEdge, edge_index};
}

std::vector<ElementId> GluingNode::label() const {
  std::vector<ElementId> ids;
  for (const BoundaryPoint& pt : points) ids.push_back(pt.element());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

int GluingNode::vertex_count() const {
  return static_cast<int>(std::count_if(points.begin(), points.end(),
                                        [](const auto& p) { return p.is_vertex(); }));
}

int GluingNode::interior_count() const {
  return static_cast<int>(points.size()) - vertex_count();
}

std::vector<std::vector<int>> GluingTree::adjacency() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (auto [a, b] : arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<int> GluingTree::degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (auto [a, b] : arcs) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

int GluingTree::leaf_count() const {
  auto deg = degrees();
  return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

int GluingTree::fold_leaf_count() const {
  int count = 0;
  auto deg = degrees();
  for (int i = 0; i < size(); ++i)
    if (deg[i] == 1 && nodes[i].is_fold_point()) ++count;
  return count;
}

Scalar point_angle(const BoundaryPoint& pt, const PolygonSpec& p) {
  if (pt.is_vertex()) return p.angle(pt.edge_index).pi_units();
  return Scalar(1);
}

GluingNode make_node(std::vector<BoundaryPoint> points, const PolygonSpec& p) {
  GluingNode node;
  node.points = std::move(points);
  for (const BoundaryPoint& pt : node.points) node.angle_sum += point_angle(pt, p);
  return node;
}

void refresh_angles(GluingTree& t, const PolygonSpec& p) {
  for (GluingNode& node : t.nodes) {
    node.angle_sum = Scalar(0);
    for (const BoundaryPoint& pt : node.points) node.angle_sum += point_angle(pt, p);
  }
}

AffineExpr boundary_position(const BoundaryPoint& pt, const PolygonSpec& p) {
  return AffineExpr(p.vertex_position(p.wrap(pt.edge_index))) + pt.offset;
}

std::vector<RollingBelt> find_rolling_belts(const GluingTree& t) {
  std::vector<RollingBelt> belts;
  const std::vector<ParamId> params = collect_params(t);
  if (params.empty()) return belts;
  auto deg = t.degrees();
  auto adj = t.adjacency();
  std::vector<int> folds;
  for (int i = 0; i < t.size(); ++i)
    if (deg[i] == 1 && t.nodes[i].is_fold_point()) folds.push_back(i);
  for (size_t x = 0; x < folds.size(); ++x) {
    for (size_t y = x + 1; y < folds.size(); ++y) {
      std::vector<int> path = tree_path(adj, folds[x], folds[y]);
      if (path.empty()) continue;
      std::vector<bool> on_path(t.nodes.size(), false);
      for (int v : path) on_path[v] = true;
      std::vector<Row> fixed;
      for (int v = 0; v < t.size(); ++v) {
        if (on_path[v]) continue;
        for (const BoundaryPoint& pt : t.nodes[v].points)
          if (!pt.is_vertex()) fixed.push_back(gradient(pt.offset, params));
      }
      Row moving = gradient(t.nodes[folds[x]].points.front().offset, params);
      int base = rank(fixed);
      fixed.push_back(moving);
      if (rank(fixed) == base) continue;
      RollingBelt belt;
      belt.leaf_a = folds[x];
      belt.leaf_b = folds[y];
      belt.path = std::move(path);
      belt.interval = t.region.range(t.nodes[folds[x]].points.front().offset);
      belts.push_back(std::move(belt));
    }
  }
  return belts;
}

std::string label_string(const GluingNode& node) {
  std::string out = "{";
  bool first = true;
  for (const ElementId& id : node.label()) {
    if (!first) out += ", ";
    out += id.to_string();
    first = false;
  }
  return out + "}";
}

namespace {

std::string interval_string(const Interval& iv) {
  if (iv.empty) return "empty";
  std::string out = iv.lo_open ? "(" : "[";
  out += iv.lo ? to_string(*iv.lo) : "-inf";
  out += ", ";
  out += iv.hi ? to_string(*iv.hi) : "inf";
  out += iv.hi_open ? ")" : "]";
  return out;
}

}  // namespace

std::string to_dot(const GluingTree& t, const std::string& name) {
  if (t.nodes.empty()) {
    throw Error(ErrorCode::kIncompleteGluing, "cannot render an empty gluing tree");
  }
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (int i = 0; i < t.size(); ++i) {
    out << "  n" << i << " [label=\"" << label_string(t.nodes[i]) << "\"";
    if (t.nodes[i].is_fold_point()) out << ", shape=point, xlabel=\"" << label_string(t.nodes[i]) << "\"";
    out << "];\n";
  }
  std::vector<std::string> arc_notes(t.arcs.size());
  for (size_t k = 0; k < t.belts.size(); ++k) {
    const RollingBelt& belt = t.belts[k];
    out << "  // belt " << k + 1 << ": n" << belt.leaf_a << " .. n" << belt.leaf_b
        << ", fold offset in " << interval_string(belt.interval) << "\n";
    for (size_t i = 0; i + 1 < belt.path.size(); ++i) {
      for (size_t a = 0; a < t.arcs.size(); ++a) {
        auto [u, v] = t.arcs[a];
        if ((u == belt.path[i] && v == belt.path[i + 1]) ||
            (v == belt.path[i] && u == belt.path[i + 1])) {
          if (!arc_notes[a].empty()) arc_notes[a] += "; ";
          arc_notes[a] += "belt " + std::to_string(k + 1) + " " +
                          interval_string(belt.interval);
        }
      }
    }
  }
  for (size_t a = 0; a < t.arcs.size(); ++a) {
    out << "  n" << t.arcs[a].first << " -- n" << t.arcs[a].second;
    if (!arc_notes[a].empty()) out << " [color=red, label=\"" << arc_notes[a] << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace foldtree
