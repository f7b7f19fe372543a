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
#include "foldtree/polygon.h"

namespace foldtree {

// {"coords": [[x, y], ...]} or {"boundary": [{"len": "p/q", "angle_pi": "p/q"}, ...]}.
PolygonSpec read_polygon_json(const std::string& text, double eps = kDefaultEpsilon);
// Boundary form, exact when the polygon is exact.
std::string write_polygon_json(const PolygonSpec& p);

// triangle | square | latin-cross | star:m | ngon:n | rect:a,b | u-octagon
PolygonSpec named_shape(const std::string& name);
// A rectilinear U-shaped octagon that admits no gluing at all.
PolygonSpec u_octagon();

// JSON array of entries, sorted as given.
std::string write_catalog_json(const std::vector<GluingTree>& trees, const PolygonSpec& p);
struct CatalogEntry {
  std::string key;
  std::string shape;
  GluingTree tree;
};
std::vector<CatalogEntry> read_catalog_json(const std::string& text);

}  // namespace foldtree
