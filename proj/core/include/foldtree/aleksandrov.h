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
#include <vector>

#include "foldtree/gluing_tree.h"

namespace foldtree {

struct NodeCheck {
  int node = 0;
  Scalar angle_sum;  // units of pi
  bool within_budget = true;
  bool flat = false;  // exactly 2pi: the glued point is not a vertex
};

struct ValidityReport {
  std::vector<NodeCheck> nodes;
  bool angles_ok = true;
  bool lengths_ok = true;
  bool noncrossing = true;
  bool is_tree = true;
  bool sphere_ok = true;
  bool valid = false;
  std::vector<std::string> problems;
};

// Evaluates the tree at its region's representative point and walks the
// boundary. Throws IncompleteGluing when part of the boundary is not
// described by the tree, and LengthMismatch when two glued sides differ.
ValidityReport check_aleksandrov(const GluingTree& t, const PolygonSpec& p,
                                 double eps = kDefaultEpsilon);

}  // namespace foldtree
