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

#include <vector>

#include "foldtree/polygon.h"

namespace foldtree {

// Boundary automorphism: i -> shift + i, or i -> shift - i when reflected.
struct BoundaryMap {
  int shift = 0;
  bool reflect = false;

  int vertex(int i, int n) const;
  // Edge e_i joins v_i and v_{i+1}; its image joins the images.
  int edge(int i, int n) const;
  BoundaryMap then(const BoundaryMap& first, int n) const;  // this o first
  BoundaryMap inverse(int n) const;
  BoundaryMap normalized(int n) const;
  bool operator==(const BoundaryMap&) const = default;
};

class SymmetryGroup {
 public:
  SymmetryGroup() = default;
  SymmetryGroup(int n, std::vector<BoundaryMap> elements)
      : n_(n), elements_(std::move(elements)) {}

  int n() const { return n_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<BoundaryMap>& elements() const { return elements_; }
  bool contains(const BoundaryMap& g) const;

 private:
  int n_ = 0;
  std::vector<BoundaryMap> elements_;
};

bool preserves_boundary(const PolygonSpec& p, const BoundaryMap& g,
                        double eps = kDefaultEpsilon);
SymmetryGroup symmetry_group(const PolygonSpec& p, double eps = kDefaultEpsilon);

}  // namespace foldtree
