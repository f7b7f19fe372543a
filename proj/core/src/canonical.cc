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

#include "foldtree/canonical.h"

#include <algorithm>
#include <map>
#include <set>

namespace foldtree {
namespace {

std::string encode(int node, int parent, const std::vector<std::vector<int>>& adj,
                   const std::vector<std::string>& labels) {
  std::vector<std::string> children;
  for (int c : adj[node])
    if (c != parent) children.push_back(encode(c, node, adj, labels));
  std::sort(children.begin(), children.end());
  std::string out = "(" + labels[node];
  for (const std::string& c : children) out += c;
  return out + ")";
}

}  // namespace

CanonicalKey canonical_form(const GluingTree& t) {
  std::vector<std::string> labels;
  for (const GluingNode& node : t.nodes) {
    std::string l;
    for (const ElementId& id : node.label()) {
      if (!l.empty()) l += ",";
      l += id.to_string();
    }
    labels.push_back(l);
  }
  auto adj = t.adjacency();
  std::string best;
  for (int root = 0; root < t.size(); ++root) {
    std::string enc = encode(root, -1, adj, labels);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return CanonicalKey(best);
}

GluingTree relabel(const GluingTree& t, const BoundaryMap& g, const PolygonSpec& p) {
  const int n = p.n();
  GluingTree out = t;
  for (GluingNode& node : out.nodes) {
    for (BoundaryPoint& pt : node.points) {
      if (pt.is_vertex()) {
        pt.edge_index = g.vertex(pt.edge_index, n);
      } else {
        int e = pt.edge_index;
        pt.edge_index = g.edge(e, n);
        if (g.reflect) pt.offset = AffineExpr(p.exact_length(e)) - pt.offset;
      }
    }
  }
  out.belts = find_rolling_belts(out);
  return out;
}

std::vector<GluingTree> quotient_by_symmetry(std::span<const GluingTree> trees,
                                             const SymmetryGroup& g,
                                             const PolygonSpec& p) {
  std::map<CanonicalKey, const GluingTree*> by_key;
  for (const GluingTree& t : trees) by_key.emplace(canonical_form(t), &t);
  std::set<CanonicalKey> claimed;
  std::vector<GluingTree> reps;
  for (const auto& [key, tree] : by_key) {
    if (claimed.count(key)) continue;
    for (const BoundaryMap& h : g.elements()) {
      claimed.insert(canonical_form(relabel(*tree, h, p)));
    }
    reps.push_back(*tree);  // keys are visited in order, so this is the least
  }
  return reps;
}

}  // namespace foldtree
