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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foldtree/aleksandrov.h"
#include "foldtree/gluing_tree.h"

namespace foldtree {

struct HalvingResult {
  GluingTree tree;
  ValidityReport report;
};

// Glues x + s to x - s for every s, a path from x to the point half the
// perimeter away. x is an offset from v_0 in [0, L).
HalvingResult perimeter_halving(const PolygonSpec& p, const Rational& x);

struct StarFamilyResult {
  bool valid = false;
  std::string reason;  // set when invalid
  GluingTree tree;
};

// Bits are read left to right from the end nearest x. Top bit j contracts
// s_{2j+1}; bottom bit j contracts s_{2m-1-2j}.
StarFamilyResult star_contraction_family(int m, const std::vector<bool>& top_bits,
                                         const std::vector<bool>& bottom_bits);
std::vector<bool> parse_bits(const std::string& text);

// The two-belt tetrahedron family of the a x b rectangle at position t of the
// first fold on the boundary, 0 <= t <= a + b.
GluingTree fold_rectangle_family(const Rational& a, const Rational& b, const Rational& t);

std::map<int, int> leaf_census(std::span<const GluingTree> trees);

}  // namespace foldtree
