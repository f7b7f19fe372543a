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

#include "foldtree/param_region.h"

#include <algorithm>
#include <climits>

#include "foldtree/error.h"

namespace foldtree {
namespace {

using Constraints = std::vector<LinearConstraint>;

// Returns false when a constant constraint is violated.
bool constant_holds(const LinearConstraint& c) {
  const Rational& v = c.expr.constant();
  return c.strict ? v > 0 : v >= 0;
}

LinearConstraint normalize(LinearConstraint c) {
  Rational scale = c.expr.is_constant() ? abs(c.expr.constant())
                                        : abs(c.expr.terms().front().second);
  if (scale != 0 && scale != 1) c.expr *= Rational(1) / scale;
  return c;
}

void insert(Constraints& set, LinearConstraint c) {
  c = normalize(std::move(c));
  for (LinearConstraint& existing : set) {
    if (existing.expr == c.expr) {
      existing.strict = existing.strict || c.strict;
      return;
    }
  }
  set.push_back(std::move(c));
}

// Eliminates one variable. Constant rows are kept so violations surface.
Constraints eliminate(const Constraints& in, ParamId id) {
  Constraints out;
  std::vector<const LinearConstraint*> pos;
  std::vector<const LinearConstraint*> neg;
  for (const LinearConstraint& c : in) {
    Rational a = c.expr.coefficient(id);
    if (a > 0) {
      pos.push_back(&c);
    } else if (a < 0) {
      neg.push_back(&c);
    } else {
      insert(out, c);
    }
  }
  for (const LinearConstraint* p : pos) {
    Rational ap = p->expr.coefficient(id);
    for (const LinearConstraint* n : neg) {
      Rational an = -n->expr.coefficient(id);
      AffineExpr combined = p->expr * an + n->expr * ap;
      insert(out, {combined, p->strict || n->strict});
    }
  }
  return out;
}

bool all_constants_hold(const Constraints& set) {
  for (const LinearConstraint& c : set)
    if (c.expr.is_constant() && !constant_holds(c)) return false;
  return true;
}

// Bounds on a single remaining variable, after every other one is fixed.
Interval bounds_for(const Constraints& set, ParamId id, const Assignment& known) {
  Interval iv;
  for (const LinearConstraint& c : set) {
    Rational a = c.expr.coefficient(id);
    AffineExpr rest = c.expr.substitute(id, AffineExpr(0));
    Rational r = rest.evaluate(known);
    if (a == 0) {
      if (c.strict ? r <= 0 : r < 0) iv.empty = true;
      continue;
    }
    Rational edge = -r / a;
    if (a > 0) {
      if (!iv.lo || edge > *iv.lo || (edge == *iv.lo && c.strict)) {
        iv.lo = edge;
        iv.lo_open = c.strict;
      }
    } else {
      if (!iv.hi || edge < *iv.hi || (edge == *iv.hi && c.strict)) {
        iv.hi = edge;
        iv.hi_open = c.strict;
      }
    }
  }
  if (iv.lo && iv.hi) {
    if (*iv.lo > *iv.hi) iv.empty = true;
    if (*iv.lo == *iv.hi && (iv.lo_open || iv.hi_open)) iv.empty = true;
  }
  return iv;
}

Rational pick(const Interval& iv) {
  if (iv.lo && iv.hi) return (*iv.lo + *iv.hi) / 2;
  if (iv.lo) return *iv.lo + 1;
  if (iv.hi) return *iv.hi - 1;
  return 0;
}

std::optional<Assignment> solve(const Constraints& cons,
                                const std::vector<ParamId>& params) {
  std::vector<Constraints> stages{cons};
  for (ParamId p : params) stages.push_back(eliminate(stages.back(), p));
  if (!all_constants_hold(stages.back())) return std::nullopt;
  Assignment values;
  for (int i = static_cast<int>(params.size()) - 1; i >= 0; --i) {
    Interval iv = bounds_for(stages[i], params[i], values);
    if (iv.empty) return std::nullopt;
    values[params[i]] = pick(iv);
  }
  return values;
}

}  // namespace

Rational Interval::length() const {
  if (!lo || !hi) throw Error(ErrorCode::kBadInput, "unbounded interval");
  return *hi - *lo;
}

void ParamRegion::add_parameter(ParamId id) {
  if (std::find(params_.begin(), params_.end(), id) == params_.end())
    params_.push_back(id);
  pinned_.reset();
}

void ParamRegion::add(const AffineExpr& expr, bool strict) {
  pinned_.reset();
  LinearConstraint c{expr, strict};
  if (expr.is_constant()) {
    if (!constant_holds(c)) violated_ = true;
    return;
  }
  insert(constraints_, std::move(c));
}

void ParamRegion::substitute(ParamId id, const AffineExpr& value) {
  pinned_.reset();
  Constraints next;
  for (const LinearConstraint& c : constraints_) {
    LinearConstraint s{c.expr.substitute(id, value), c.strict};
    if (s.expr.is_constant()) {
      if (!constant_holds(s)) violated_ = true;
      continue;
    }
    insert(next, std::move(s));
  }
  constraints_ = std::move(next);
  params_.erase(std::remove(params_.begin(), params_.end(), id), params_.end());
}

void ParamRegion::prune_parameters(const std::vector<ParamId>& still_used) {
  std::vector<ParamId> keep;
  for (ParamId p : params_) {
    bool used = std::find(still_used.begin(), still_used.end(), p) != still_used.end();
    for (const LinearConstraint& c : constraints_) used = used || c.expr.depends_on(p);
    if (used) keep.push_back(p);
  }
  params_ = std::move(keep);
}

bool ParamRegion::feasible() const {
  if (violated_) return false;
  return solve(constraints_, params_).has_value();
}

Assignment ParamRegion::representative() const {
  if (pinned_) return *pinned_;
  if (violated_) throw Error(ErrorCode::kBadInput, "empty parameter region");
  auto values = solve(constraints_, params_);
  if (!values) throw Error(ErrorCode::kBadInput, "empty parameter region");
  return *values;
}

void ParamRegion::pin_representative(Assignment values) {
  if (!contains(values)) {
    throw Error(ErrorCode::kBadParameter, "point lies outside the region");
  }
  pinned_ = std::move(values);
}

bool ParamRegion::contains(const Assignment& values) const {
  if (violated_) return false;
  for (const LinearConstraint& c : constraints_) {
    Rational v = c.expr.evaluate(values);
    if (c.strict ? v <= 0 : v < 0) return false;
  }
  return true;
}

Interval ParamRegion::range(const AffineExpr& expr) const {
  Interval iv;
  if (violated_) {
    iv.empty = true;
    return iv;
  }
  if (expr.is_constant()) {
    iv.lo = iv.hi = expr.constant();
    iv.lo_open = iv.hi_open = false;
    return iv;
  }
  // Introduce z = expr, solve for one parameter and project onto z.
  const ParamId z = INT_MAX;
  auto [p, a] = expr.terms().front();
  AffineExpr rest = expr.substitute(p, AffineExpr(0));
  AffineExpr p_value = (AffineExpr::Param(z) - rest) * (Rational(1) / a);
  Constraints set;
  for (const LinearConstraint& c : constraints_) {
    insert(set, {c.expr.substitute(p, p_value), c.strict});
  }
  for (ParamId q : params_) {
    if (q != p) set = eliminate(set, q);
  }
  if (!all_constants_hold(set)) {
    iv.empty = true;
    return iv;
  }
  return bounds_for(set, z, {});
}

}  // namespace foldtree
