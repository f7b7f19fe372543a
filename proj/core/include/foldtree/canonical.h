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
#include <span>
#include <string>
#include <vector>

#include "foldtree/gluing_tree.h"
#include "foldtree/symmetry.h"

namespace foldtree {

class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string text) : text_(std::move(text)) {}
  const std::string& str() const { return text_; }
  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::string text_;
};

// Unordered labeled-tree encoding minimized over all roots. Parameter values
// and fold positions do not enter the key, only element labels.
CanonicalKey canonical_form(const GluingTree& t);

// Image of a tree under a boundary automorphism of p.
GluingTree relabel(const GluingTree& t, const BoundaryMap& g, const PolygonSpec& p);

// One representative per orbit: the member with the least key.
std::vector<GluingTree> quotient_by_symmetry(std::span<const GluingTree> trees,
                                             const SymmetryGroup& g,
                                             const PolygonSpec& p);

}  // namespace foldtree
