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

enum class Shape { kPath, kY, kI, kPlus, kOther };

std::string to_string(Shape s);  // "|", "Y", "I", "+", "Other"
Shape classify_shape(const GluingTree& t);

struct ConformanceReport {
  bool item1 = true;  // at most one nonvertex at nodes of degree other than 2
  bool item2 = true;  // at most four fold leaves; four only for '+' or 'I'
  bool item3 = true;  // at most two rolling belts
  bool item4 = true;  // two belts only for 'I'
  int fold_leaves = 0;
  int rolling_belts = 0;
  Shape shape = Shape::kOther;
  std::vector<std::string> violations;
  bool ok() const { return item1 && item2 && item3 && item4; }
};

ConformanceReport structural_check(const GluingTree& t, const PolygonSpec& p);

}  // namespace foldtree
