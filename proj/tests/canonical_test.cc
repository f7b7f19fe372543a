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

#include <algorithm>
#include <map>
#include <random>

#include "foldtree/canonical.h"
#include "foldtree/enumerate.h"
#include "foldtree/families.h"
#include "foldtree/symmetry.h"
#include "support/oracles.h"

namespace foldtree {
namespace {

GluingTree permuted(const GluingTree& t, std::mt19937& rng) {
  std::vector<int> perm(t.size());
  for (int i = 0; i < t.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  GluingTree out = t;
  for (int i = 0; i < t.size(); ++i) out.nodes[perm[i]] = t.nodes[i];
  out.arcs.clear();
  for (auto [a, b] : t.arcs) {
    if (rng() % 2) std::swap(a, b);
    out.arcs.emplace_back(perm[a], perm[b]);
  }
  std::shuffle(out.arcs.begin(), out.arcs.end(), rng);
  for (GluingNode& n : out.nodes) std::shuffle(n.points.begin(), n.points.end(), rng);
  return out;
}

TEST(Canonical, IndependentOfNodeAndArcOrder) {
  std::mt19937 rng(7);
  for (const PolygonSpec& p : {equilateral_triangle(), unit_square(), latin_cross()}) {
    for (const GluingTree& t : enumerate_gluings(p).trees) {
      const CanonicalKey k = canonical_form(t);
      for (int i = 0; i < 3; ++i) EXPECT_EQ(canonical_form(permuted(t, rng)), k);
    }
  }
}

TEST(Canonical, BeltPositionDoesNotChangeTheKey) {
  CanonicalKey a = canonical_form(fold_rectangle_family(2, 1, Rational(1, 4)));
  CanonicalKey b = canonical_form(fold_rectangle_family(2, 1, Rational(3, 4)));
  CanonicalKey edge = canonical_form(fold_rectangle_family(2, 1, 0));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, edge);
}

TEST(Canonical, DistinctTreesHaveDistinctKeys) {
  for (const PolygonSpec& p : {equilateral_triangle(), unit_square(), latin_cross()}) {
    EnumerationResult r = enumerate_gluings(p);
    std::set<CanonicalKey> keys(r.keys.begin(), r.keys.end());
    EXPECT_EQ(keys.size(), r.trees.size());
    EXPECT_TRUE(std::is_sorted(r.keys.begin(), r.keys.end()));
  }
}

// Orbits computed by union-find over the action of every group element.
int orbit_count(const std::vector<GluingTree>& trees, const SymmetryGroup& g,
                const PolygonSpec& p) {
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> find = [&](const std::string& k) {
    return parent[k] == k ? k : parent[k] = find(parent[k]);
  };
  for (const GluingTree& t : trees) {
    const std::string k = canonical_form(t).str();
    parent.emplace(k, k);
  }
  for (const GluingTree& t : trees) {
    for (const BoundaryMap& m : g.elements()) {
      const std::string a = find(canonical_form(t).str());
      const std::string image = canonical_form(relabel(t, m, p)).str();
      EXPECT_TRUE(parent.count(image)) << "image of a gluing is missing";
      parent.emplace(image, image);
      parent[a] = find(image);
    }
  }
  std::set<std::string> roots;
  for (const auto& [k, v] : parent) roots.insert(find(k));
  return static_cast<int>(roots.size());
}

TEST(Canonical, QuotientMatchesOrbitCount) {
  for (const PolygonSpec& p : {equilateral_triangle(), unit_square(), rectangle(2, 1),
                               latin_cross(), regular_ngon(6)}) {
    const auto trees = enumerate_gluings(p).trees;
    const SymmetryGroup g = symmetry_group(p);
    const auto reps = quotient_by_symmetry(trees, g, p);
    EXPECT_EQ(static_cast<int>(reps.size()), orbit_count(trees, g, p)) << p.name();
    // Each representative is the least key in its orbit.
    for (const GluingTree& r : reps) {
      for (const BoundaryMap& m : g.elements()) {
        EXPECT_LE(canonical_form(r), canonical_form(relabel(r, m, p)));
      }
    }
  }
}

TEST(Canonical, RelabelByReflectionMirrorsPositions) {
  PolygonSpec r = rectangle(2, 1);
  const Rational L = r.exact_perimeter();
  GluingTree t = perimeter_halving(r, Rational(1, 3)).tree;
  // The reflection swapping v1 and v2 sends boundary position x to 2 - x.
  GluingTree m = relabel(t, BoundaryMap{1, true}, r);
  ASSERT_EQ(m.size(), t.size());
  std::multiset<Rational> mirrored, image;
  for (const GluingNode& n : t.nodes)
    for (const BoundaryPoint& p : n.points) {
      Rational x = 2 - boundary_position(p, r).constant();
      mirrored.insert(x < 0 ? x + L : x);
    }
  for (const GluingNode& n : m.nodes)
    for (const BoundaryPoint& p : n.points) image.insert(boundary_position(p, r).constant());
  EXPECT_EQ(mirrored, image);
}

}  // namespace
}  // namespace foldtree
