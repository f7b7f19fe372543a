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

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "foldtree/affine.h"
#include "foldtree/param_region.h"
#include "foldtree/polygon.h"

namespace foldtree {

enum class ElementKind { kVertex, kEdge };

struct ElementId {
  ElementKind kind = ElementKind::kVertex;
  int index = 0;  // zero-based; printed one-based as v1.. and e1..
  auto operator<=>(const ElementId&) const = default;
  std::string to_string() const;
};

enum class PointKind { kVertex, kInterior };

struct BoundaryPoint {
  int edge_index = 0;
  AffineExpr offset;  // zero for vertices
  PointKind kind = PointKind::kVertex;

  static BoundaryPoint Vertex(int i) { return {i, AffineExpr(0), PointKind::kVertex}; }
  static BoundaryPoint Interior(int edge, AffineExpr offset) {
    return {edge, std::move(offset), PointKind::kInterior};
  }
  ElementId element() const;
  bool is_vertex() const { return kind == PointKind::kVertex; }
  bool operator==(const BoundaryPoint&) const = default;
};

struct GluingNode {
  std::vector<BoundaryPoint> points;
  Scalar angle_sum;  // units of pi

  std::vector<ElementId> label() const;  // sorted, unique
  int vertex_count() const;
  int interior_count() const;
  bool is_fold_point() const {
    return points.size() == 1 && !points.front().is_vertex();
  }
};

struct RollingBelt {
  int leaf_a = 0;
  int leaf_b = 0;
  std::vector<int> path;  // node indices from leaf_a to leaf_b
  Interval interval;      // range of leaf_a's offset along its edge
};

struct GluingTree {
  std::vector<GluingNode> nodes;
  std::vector<std::pair<int, int>> arcs;
  ParamRegion region;
  std::vector<RollingBelt> belts;

  int size() const { return static_cast<int>(nodes.size()); }
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  int leaf_count() const;
  int fold_leaf_count() const;
};

Scalar point_angle(const BoundaryPoint& pt, const PolygonSpec& p);
GluingNode make_node(std::vector<BoundaryPoint> points, const PolygonSpec& p);
// Recomputes every node's angle sum from the polygon.
void refresh_angles(GluingTree& t, const PolygonSpec& p);

// Absolute position of a point along the boundary measured from v_0.
AffineExpr boundary_position(const BoundaryPoint& pt, const PolygonSpec& p);

std::vector<RollingBelt> find_rolling_belts(const GluingTree& t);

std::string label_string(const GluingNode& node);
std::string to_dot(const GluingTree& t, const std::string& name = "gluing");

}  // namespace foldtree
