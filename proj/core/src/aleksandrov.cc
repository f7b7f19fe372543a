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

#include "foldtree/aleksandrov.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "foldtree/error.h"

namespace foldtree {
namespace {

struct Placed {
  Rational position;
  int node;
};

bool connected(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  int components = n;
  for (auto [a, b] : arcs) {
    int ra = find(a);
    int rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

ValidityReport check_aleksandrov(const GluingTree& t, const PolygonSpec& p,
                                 double eps) {
  ValidityReport report;
  const int n = p.n();
  if (t.nodes.empty()) throw Error(ErrorCode::kIncompleteGluing, "tree has no nodes");
  if (!p.lengths_exact()) {
    throw Error(ErrorCode::kInexactPolygon, "checker needs exact edge lengths");
  }
  auto problem = [&report](std::string text) {
    report.problems.push_back(std::move(text));
  };

  for (int i = 0; i < t.size(); ++i) {
    const GluingNode& node = t.nodes[i];
    Scalar recomputed;
    for (const BoundaryPoint& pt : node.points) recomputed += point_angle(pt, p);
    NodeCheck check{i, node.angle_sum};
    if (compare(recomputed, node.angle_sum, eps) != 0) {
      report.angles_ok = false;
      check.within_budget = false;
      problem("node " + std::to_string(i) + " records angle " +
              node.angle_sum.to_string() + "pi but its points sum to " +
              recomputed.to_string() + "pi");
    }
    int budget = std::max(compare(node.angle_sum, Scalar(2), eps),
                          compare(recomputed, Scalar(2), eps));
    if (budget > 0) {
      report.angles_ok = false;
      check.within_budget = false;
      problem("node " + std::to_string(i) + " " + label_string(node) +
              " exceeds 2pi");
    }
    check.flat = compare(recomputed, Scalar(2), eps) == 0;
    report.nodes.push_back(check);
  }

  const Assignment at = t.region.representative();
  std::vector<Placed> placed;
  std::vector<int> vertex_seen(n, 0);
  for (int i = 0; i < t.size(); ++i) {
    for (const BoundaryPoint& pt : t.nodes[i].points) {
      if (pt.edge_index < 0 || pt.edge_index >= n) {
        throw Error(ErrorCode::kIncompleteGluing, "point refers to a missing element");
      }
      Rational offset = pt.offset.evaluate(at);
      if (pt.is_vertex()) {
        if (offset != 0) problem("vertex point with nonzero offset");
        ++vertex_seen[pt.edge_index];
      } else if (offset <= 0 || offset >= p.exact_length(pt.edge_index)) {
        problem("point on " + pt.element().to_string() + " lies off the edge interior");
        report.lengths_ok = false;
      }
      placed.push_back({p.vertex_position(pt.edge_index) + offset, i});
    }
  }
  for (int v = 0; v < n; ++v) {
    if (vertex_seen[v] == 0) {
      throw Error(ErrorCode::kIncompleteGluing,
                  "vertex v" + std::to_string(v + 1) + " is not glued anywhere");
    }
    if (vertex_seen[v] > 1) {
      report.sphere_ok = false;
      problem("vertex v" + std::to_string(v + 1) + " appears in several nodes");
    }
  }
  std::sort(placed.begin(), placed.end(),
            [](const Placed& a, const Placed& b) { return a.position < b.position; });
  for (size_t i = 0; i + 1 < placed.size(); ++i) {
    if (placed[i].position == placed[i + 1].position) {
      report.sphere_ok = false;
      problem("two points of the gluing coincide on the boundary");
    }
  }

  // Tree structure.
  std::map<std::pair<int, int>, int> arc_index;
  for (size_t a = 0; a < t.arcs.size(); ++a) {
    auto [u, w] = t.arcs[a];
    if (u < 0 || w < 0 || u >= t.size() || w >= t.size() || u == w) {
      report.is_tree = false;
      problem("malformed arc");
      continue;
    }
    auto key = std::minmax(u, w);
    if (!arc_index.emplace(key, static_cast<int>(a)).second) {
      report.is_tree = false;
      problem("repeated arc");
    }
  }
  if (static_cast<int>(t.arcs.size()) != t.size() - 1 || !connected(t.size(), t.arcs)) {
    report.is_tree = false;
    problem("arcs do not form a tree");
  }
  std::vector<int> deg = t.degrees();
  for (int i = 0; i < t.size(); ++i) {
    if (deg[i] != static_cast<int>(t.nodes[i].points.size())) {
      report.sphere_ok = false;
      problem("node " + std::to_string(i) + " has degree " + std::to_string(deg[i]) +
              " but " + std::to_string(t.nodes[i].points.size()) + " boundary points");
    }
  }

  // Walk the boundary: each segment between consecutive glued points must
  // run along an arc, and every arc is used once in each direction.
  const Rational perimeter = p.exact_perimeter();
  const size_t count = placed.size();
  std::vector<int> forward_uses(t.arcs.size(), 0);
  std::vector<int> backward_uses(t.arcs.size(), 0);
  std::vector<Rational> forward_length(t.arcs.size());
  std::vector<Rational> backward_length(t.arcs.size());
  std::vector<int> word;
  for (size_t k = 0; k < count; ++k) {
    const Placed& from = placed[k];
    const Placed& to = placed[(k + 1) % count];
    Rational len = to.position - from.position;
    if (k + 1 == count) len += perimeter;
    if (from.node == to.node) {
      report.sphere_ok = false;
      problem("a boundary segment starts and ends at the same node");
      continue;
    }
    auto it = arc_index.find(std::minmax(from.node, to.node));
    if (it == arc_index.end()) {
      throw Error(ErrorCode::kIncompleteGluing,
                  "boundary segment between nodes " + std::to_string(from.node) +
                      " and " + std::to_string(to.node) + " is not glued by any arc");
    }
    int a = it->second;
    word.push_back(a);
    if (from.node == t.arcs[a].first) {
      ++forward_uses[a];
      forward_length[a] += len;
    } else {
      ++backward_uses[a];
      backward_length[a] += len;
    }
  }
  for (size_t a = 0; a < t.arcs.size(); ++a) {
    if (forward_uses[a] != 1 || backward_uses[a] != 1) {
      report.sphere_ok = false;
      problem("arc " + std::to_string(a) + " is not traversed once in each direction");
      continue;
    }
    if (forward_length[a] != backward_length[a]) {
      throw Error(ErrorCode::kLengthMismatch,
                  "arc " + std::to_string(a) + " glues sides of length " +
                      to_string(forward_length[a]) + " and " +
                      to_string(backward_length[a]));
    }
  }
  std::vector<int> stack;
  std::vector<int> seen(t.arcs.size(), 0);
  for (int a : word) {
    if (seen[a]++ == 0) {
      stack.push_back(a);
    } else if (!stack.empty() && stack.back() == a) {
      stack.pop_back();
    } else {
      report.noncrossing = false;
    }
  }
  if (!report.noncrossing) problem("glued pairs cross");
  report.sphere_ok = report.sphere_ok && report.noncrossing && report.is_tree;
  report.valid = report.angles_ok && report.lengths_ok && report.sphere_ok;
  return report;
}

}  // namespace foldtree
