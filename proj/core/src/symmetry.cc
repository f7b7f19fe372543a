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

#include "foldtree/symmetry.h"

namespace foldtree {
namespace {

int wrap(int i, int n) {
  int m = i % n;
  return m < 0 ? m + n : m;
}

}  // namespace

int BoundaryMap::vertex(int i, int n) const {
  return wrap(reflect ? shift - i : shift + i, n);
}

int BoundaryMap::edge(int i, int n) const {
  return wrap(reflect ? shift - i - 1 : shift + i, n);
}

BoundaryMap BoundaryMap::then(const BoundaryMap& first, int n) const {
  BoundaryMap r;
  if (!reflect && !first.reflect) r = {shift + first.shift, false};
  if (!reflect && first.reflect) r = {shift + first.shift, true};
  if (reflect && !first.reflect) r = {shift - first.shift, true};
  if (reflect && first.reflect) r = {shift - first.shift, false};
  return r.normalized(n);
}

BoundaryMap BoundaryMap::inverse(int n) const {
  if (reflect) return normalized(n);
  return BoundaryMap{-shift, false}.normalized(n);
}

BoundaryMap BoundaryMap::normalized(int n) const {
  return {wrap(shift, n), reflect};
}

bool SymmetryGroup::contains(const BoundaryMap& g) const {
  BoundaryMap h = g.normalized(n_);
  for (const BoundaryMap& e : elements_)
    if (e == h) return true;
  return false;
}

bool preserves_boundary(const PolygonSpec& p, const BoundaryMap& g, double eps) {
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    if (compare(p.angle(g.vertex(i, n)).pi_units(), p.angle(i).pi_units(),
                eps) != 0)
      return false;
    if (compare(p.length(g.edge(i, n)), p.length(i), eps) != 0) return false;
  }
  return true;
}

SymmetryGroup symmetry_group(const PolygonSpec& p, double eps) {
  const int n = p.n();
  std::vector<BoundaryMap> elements;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int s = 0; s < n; ++s) {
      BoundaryMap g{s, reflect == 1};
      if (preserves_boundary(p, g, eps)) elements.push_back(g);
    }
  }
  return SymmetryGroup(n, std::move(elements));
}

}  // namespace foldtree
