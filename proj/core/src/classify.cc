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

#include "foldtree/classify.h"

namespace foldtree {

std::string to_string(Shape s) {
  switch (s) {
    case Shape::kPath:
      return "|";
    case Shape::kY:
      return "Y";
    case Shape::kI:
      return "I";
    case Shape::kPlus:
      return "+";
    case Shape::kOther:
      return "Other";
  }
  return "Other";
}

Shape classify_shape(const GluingTree& t) {
  std::vector<int> deg = t.degrees();
  std::vector<int> branch;
  int max_degree = 0;
  for (int i = 0; i < t.size(); ++i) {
    max_degree = std::max(max_degree, deg[i]);
    if (deg[i] >= 3) branch.push_back(i);
  }
  if (max_degree <= 2) return Shape::kPath;
  if (branch.size() == 1) {
    if (deg[branch[0]] == 3) return Shape::kY;
    if (deg[branch[0]] == 4) return Shape::kPlus;
    return Shape::kOther;
  }
  if (branch.size() == 2 && deg[branch[0]] == 3 && deg[branch[1]] == 3) {
    // Degree-2 nodes between the two branch points are ignored.
    auto adj = t.adjacency();
    int prev = branch[0];
    for (int start : adj[branch[0]]) {
      int cur = start;
      prev = branch[0];
      while (deg[cur] == 2) {
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
      if (cur == branch[1]) return Shape::kI;
    }
  }
  return Shape::kOther;
}

ConformanceReport structural_check(const GluingTree& t, const PolygonSpec& p) {
  (void)p;
  ConformanceReport r;
  std::vector<int> deg = t.degrees();
  for (int i = 0; i < t.size(); ++i) {
    if (deg[i] != 2 && t.nodes[i].interior_count() > 1) {
      r.item1 = false;
      r.violations.push_back("node " + label_string(t.nodes[i]) +
                             " glues more than one nonvertex");
    }
  }
  r.shape = classify_shape(t);
  r.fold_leaves = t.fold_leaf_count();
  if (r.fold_leaves > 4) {
    r.item2 = false;
    r.violations.push_back(std::to_string(r.fold_leaves) + " fold-point leaves");
  } else if (r.fold_leaves == 4 &&
             !(t.leaf_count() == 4 &&
               (r.shape == Shape::kPlus || r.shape == Shape::kI))) {
    r.item2 = false;
    r.violations.push_back("four fold-point leaves on a tree shaped " + to_string(r.shape));
  }
  r.rolling_belts = static_cast<int>(find_rolling_belts(t).size());
  if (r.rolling_belts > 2) {
    r.item3 = false;
    r.violations.push_back(std::to_string(r.rolling_belts) + " rolling belts");
  }
  if (r.rolling_belts == 2 && r.shape != Shape::kI) {
    r.item4 = false;
    r.violations.push_back("two rolling belts on a tree shaped " + to_string(r.shape));
  }
  return r;
}

}  // namespace foldtree
