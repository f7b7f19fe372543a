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

#include <optional>
#include <vector>

#include "foldtree/affine.h"

namespace foldtree {

// expr > 0 when strict, expr >= 0 otherwise.
struct LinearConstraint {
  AffineExpr expr;
  bool strict = true;
  bool operator==(const LinearConstraint&) const = default;
};

struct Interval {
  bool empty = false;
  std::optional<Rational> lo;  // nullopt means unbounded
  std::optional<Rational> hi;
  bool lo_open = true;
  bool hi_open = true;
  Rational length() const;  // requires both ends finite
};

// Convex polyhedral set of feasible parameter values, kept as a list of
// linear constraints and decided by Fourier-Motzkin elimination.
class ParamRegion {
 public:
  const std::vector<ParamId>& parameters() const { return params_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  int dimension() const { return static_cast<int>(params_.size()); }

  void add_parameter(ParamId id);
  void add(const AffineExpr& expr, bool strict);
  void substitute(ParamId id, const AffineExpr& value);
  // Drops parameters that no longer appear in any constraint.
  void prune_parameters(const std::vector<ParamId>& still_used);

  bool feasible() const;
  Assignment representative() const;
  void pin_representative(Assignment values);
  bool contains(const Assignment& values) const;
  Interval range(const AffineExpr& expr) const;

 private:
  std::vector<ParamId> params_;
  std::vector<LinearConstraint> constraints_;
  bool violated_ = false;
  std::optional<Assignment> pinned_;
};

}  // namespace foldtree
