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

#include "foldtree/affine.h"

#include <algorithm>

#include "foldtree/error.h"

namespace foldtree {

AffineExpr AffineExpr::Param(ParamId id, const Rational& coeff) {
  AffineExpr e;
  if (coeff != 0) e.terms_.emplace_back(id, coeff);
  return e;
}

Rational AffineExpr::coefficient(ParamId id) const {
  for (const auto& [p, c] : terms_)
    if (p == id) return c;
  return 0;
}

bool AffineExpr::depends_on(ParamId id) const {
  for (const auto& term : terms_)
    if (term.first == id) return true;
  return false;
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
  constant_ += o.constant_;
  if (o.terms_.empty()) return *this;
  std::vector<std::pair<ParamId, Rational>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& o) { return *this += -o; }

AffineExpr& AffineExpr::operator*=(const Rational& k) {
  if (k == 0) {
    constant_ = 0;
    terms_.clear();
    return *this;
  }
  constant_ *= k;
  for (auto& term : terms_) term.second *= k;
  return *this;
}

AffineExpr AffineExpr::substitute(ParamId id, const AffineExpr& value) const {
  Rational c = coefficient(id);
  if (c == 0) return *this;
  AffineExpr rest = *this;
  rest.terms_.erase(std::remove_if(rest.terms_.begin(), rest.terms_.end(),
                                   [id](const auto& t) { return t.first == id; }),
                    rest.terms_.end());
  return rest + value * c;
}

Rational AffineExpr::evaluate(const Assignment& values) const {
  Rational r = constant_;
  for (const auto& [p, c] : terms_) {
    auto it = values.find(p);
    if (it == values.end()) {
      throw Error(ErrorCode::kBadInput,
                  "no value for parameter t" + std::to_string(p));
    }
    r += c * it->second;
  }
  return r;
}

std::string AffineExpr::to_string() const {
  std::string out;
  if (constant_ != 0 || terms_.empty()) out = foldtree::to_string(constant_);
  for (const auto& [p, c] : terms_) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += foldtree::to_string(mag) + "*";
    out += "t" + std::to_string(p);
  }
  return out;
}

}  // namespace foldtree
