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

#include "foldtree/edge_to_edge.h"

#include <functional>
#include <map>
#include <tuple>

#include "foldtree/canonical.h"
#include "foldtree/error.h"

namespace foldtree {
namespace {

// Chains are runs of whole edges between unrolled vertices i < j. The chain
// (i, j) is zipped closed from both ends: its first and last edges glue to
// each other, and the vertices v_{i+1}, v_{j-1} meet at a new node.
class EdgeDp {
 public:
  explicit EdgeDp(const PolygonSpec& p) : p_(p), n_(p.n()) {
    if (!p.lengths_exact()) {
      throw Error(ErrorCode::kInexactPolygon, "edge-to-edge search needs exact lengths");
    }
  }

  std::uint64_t chains(int i, int j) {
    if (j == i + 1) return 1;
    if (p_.exact_length(i) != p_.exact_length(j - 1)) return 0;
    const int u = i + 1;
    const int w = j - 1;
    if (u == w) return 1;
    auto key = std::make_pair(i, j);
    if (auto it = chain_memo_.find(key); it != chain_memo_.end()) return it->second;
    Scalar left = Scalar(2) - angle(u) - angle(w);
    std::uint64_t total = compare(left, Scalar(0)) < 0 ? 0 : node_runs(u, w, left);
    chain_memo_[key] = total;
    return total;
  }

  // Ways to continue a node from vertex x up to the closing vertex `end`,
  // whose angle is already paid for, with `left` angle still available.
  std::uint64_t node_runs(int x, int end, const Scalar& left) {
    if (x == end) return 1;
    auto key = std::make_tuple(x, end, left.to_string());
    if (auto it = run_memo_.find(key); it != run_memo_.end()) return it->second;
    std::uint64_t total = 0;
    for (int y = x + 1; y <= end; ++y) {
      if (y == end) {
        total += chains(x, y);
        continue;
      }
      if (compare(angle(y), left) > 0) continue;
      std::uint64_t first = chains(x, y);
      if (first == 0) continue;
      total += first * node_runs(y, end, left - angle(y));
    }
    run_memo_[key] = total;
    return total;
  }

  std::uint64_t count() { return node_runs(0, n_, Scalar(2) - angle(0)); }

  std::vector<GluingTree> enumerate() {
    std::vector<GluingTree> out;
    Build b;
    b.nodes.push_back({0});
    extend_node(b, 0, 0, n_, Scalar(2) - angle(0), [&] { finish(b, out); });
    return out;
  }

 private:
  struct Pending {
    int i;
    int j;
    int parent;
  };
  // Vertex lists per node; -1 - e marks the midpoint fold of edge e.
  struct Build {
    std::vector<std::vector<int>> nodes;
    std::vector<std::pair<int, int>> arcs;
    std::vector<Pending> pending;
  };

  Scalar angle(int k) const { return p_.angle(k).pi_units(); }

  // Grows node `id` from vertex x toward `end`, then drains pending chains.
  void extend_node(Build& b, int id, int x, int end, const Scalar& left,
                   const std::function<void()>& done) {
    if (x == end) {
      drain(b, done);
      return;
    }
    for (int y = x + 1; y <= end; ++y) {
      if (chains(x, y) == 0) continue;
      if (y != end && compare(angle(y), left) > 0) continue;
      if (y != end && node_runs(y, end, left - angle(y)) == 0) continue;
      b.pending.push_back({x, y, id});
      if (y != end) b.nodes[id].push_back(p_.wrap(y));
      extend_node(b, id, y, end, y == end ? left : left - angle(y), done);
      if (y != end) b.nodes[id].pop_back();
      b.pending.pop_back();
    }
  }

  void drain(Build& b, const std::function<void()>& done) {
    if (b.pending.empty()) {
      done();
      return;
    }
    Pending c = b.pending.back();
    b.pending.pop_back();
    const int id = static_cast<int>(b.nodes.size());
    b.arcs.emplace_back(c.parent, id);
    if (c.j == c.i + 1) {
      b.nodes.push_back({-1 - p_.wrap(c.i)});
      drain(b, done);
    } else if (c.j == c.i + 2) {
      b.nodes.push_back({p_.wrap(c.i + 1)});
      drain(b, done);
    } else {
      const int u = c.i + 1;
      const int w = c.j - 1;
      b.nodes.push_back({p_.wrap(u)});
      // The closing vertex w is listed when the node is complete.
      std::function<void()> close = [&] {
        b.nodes[id].push_back(p_.wrap(w));
        done();
        b.nodes[id].pop_back();
      };
      extend_node(b, id, u, w, Scalar(2) - angle(u) - angle(w), close);
    }
    b.nodes.pop_back();
    b.arcs.pop_back();
    b.pending.push_back(c);
  }

  void finish(const Build& b, std::vector<GluingTree>& out) {
    GluingTree t;
    for (const auto& verts : b.nodes) {
      std::vector<BoundaryPoint> pts;
      for (int v : verts) {
        if (v >= 0) {
          pts.push_back(BoundaryPoint::Vertex(v));
        } else {
          int e = -1 - v;
          pts.push_back(BoundaryPoint::Interior(e, AffineExpr(p_.exact_length(e) / 2)));
        }
      }
      t.nodes.push_back(make_node(std::move(pts), p_));
    }
    t.arcs = b.arcs;
    out.push_back(std::move(t));
  }

  const PolygonSpec& p_;
  const int n_;
  std::map<std::pair<int, int>, std::uint64_t> chain_memo_;
  std::map<std::tuple<int, int, std::string>, std::uint64_t> run_memo_;
};

}  // namespace

std::uint64_t count_edge_to_edge(const PolygonSpec& p) { return EdgeDp(p).count(); }

std::vector<GluingTree> enumerate_edge_to_edge(const PolygonSpec& p) {
  EdgeDp dp(p);
  std::vector<GluingTree> trees = dp.enumerate();
  std::sort(trees.begin(), trees.end(), [](const GluingTree& a, const GluingTree& b) {
    return canonical_form(a) < canonical_form(b);
  });
  return trees;
}

}  // namespace foldtree
