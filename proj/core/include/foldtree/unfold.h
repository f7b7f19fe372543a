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

#include <string>
#include <utility>
#include <vector>

#include "foldtree/rational.h"

namespace foldtree {

// Convex hull of two similarly oriented regular k-gons in parallel planes.
struct Frustum {
  int k = 8;
  Rational r_bottom = 2;
  Rational r_top = 1;
  Rational height = 1;
};

void validate_frustum(const Frustum& f);

// Surface point ids: bottom vertex B_i is i, top vertex T_i is k + i and the
// centre of the top face is 2k.
inline int bottom_vertex(const Frustum& f, int i) { return ((i % f.k) + f.k) % f.k; }
inline int top_vertex(const Frustum& f, int i) { return f.k + ((i % f.k) + f.k) % f.k; }
inline int top_center(const Frustum& f) { return 2 * f.k; }
std::string surface_point_name(const Frustum& f, int id);

struct CutSegment {
  int a = 0;
  int b = 0;
};

struct CutTree {
  int k = 0;
  std::vector<bool> bits;  // bits[i] is m_i
  std::vector<CutSegment> segments;
};

// Base tree: every rung B_i T_i and the top rims T_i T_{i+1} for i = 1..k-1.
// Bit m_i replaces rung B_{i+1} T_{i+1} by the diagonal B_{i+1} T_{i+2} of
// trapezoid L_{i+1}.
CutTree volcano_cut_tree(const Frustum& f, const std::vector<bool>& bits);
// Leftmost character is m_{k-2}, as in T_{1001101}.
CutTree volcano_cut_tree(const Frustum& f, const std::string& bitstring);
std::string bit_string(const CutTree& t);

struct Vec2 {
  double x = 0;
  double y = 0;
};

struct PlanarPolygon {
  std::vector<Vec2> vertices;
  std::vector<int> sources;  // surface point id behind each vertex
};

struct Development {
  PlanarPolygon boundary;
  bool simple = false;
  double cut_length = 0;
  double boundary_length = 0;
  double surface_area = 0;
  double developed_area = 0;
  double isometry_error = 0;  // worst edge-length deviation over faces
  std::vector<std::vector<Vec2>> faces;
};

// Never throws for non-simple layouts; see unfold.
Development develop(const Frustum& f, const CutTree& t);
PlanarPolygon unfold(const Frustum& f, const CutTree& t);

struct CutTreeReport {
  bool item1 = true;  // tree
  bool item2 = true;  // spans the polytope vertices
  bool item3 = true;  // leaves at vertices
  bool item4 = true;  // degree d point <-> d boundary points
  bool item5 = true;  // segments lie on the surface
  std::vector<std::string> violations;
  bool ok() const { return item1 && item2 && item3 && item4 && item5; }
};

CutTreeReport validate_cut_tree(const Frustum& f, const CutTree& t);

// Cyclic (edge length, turn at edge end) sequence with straight vertices
// dropped.
struct Signature {
  std::vector<std::pair<double, double>> items;
};

Signature congruence_signature(const PlanarPolygon& poly);
bool congruent(const Signature& a, const Signature& b, double tol = 1e-6);
bool is_simple(const PlanarPolygon& poly, double tol);

struct UnfoldingCensus {
  int total = 0;
  int simple = 0;
  int distinct = 0;
  std::vector<std::string> non_simple;
  std::vector<Signature> signatures;  // one per simple unfolding, in bit order
};

UnfoldingCensus distinct_unfoldings(const Frustum& f);

std::string to_svg(const PlanarPolygon& poly, const Frustum& f);

}  // namespace foldtree
