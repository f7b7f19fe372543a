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

#include <cstdint>
#include <vector>

#include "foldtree/gluing_tree.h"

namespace foldtree {

// Gluings in which every edge is glued whole to an equal-length edge or
// folded at its midpoint. Counting is an interval dynamic program over
// boundary chains; enumeration walks the same recurrences.
std::uint64_t count_edge_to_edge(const PolygonSpec& p);
std::vector<GluingTree> enumerate_edge_to_edge(const PolygonSpec& p);

}  // namespace foldtree
