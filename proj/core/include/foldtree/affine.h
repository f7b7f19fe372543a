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
#include <string>
#include <utility>
#include <vector>

#include "foldtree/rational.h"

namespace foldtree {

using ParamId = int;
using Assignment = std::map<ParamId, Rational>;

// c + sum_i a_i * t_i with rational coefficients.
class AffineExpr {
 public:
  AffineExpr() = default;
  AffineExpr(const Rational& c) : constant_(c) {}  // NOLINT
  AffineExpr(int c) : constant_(c) {}              // NOLINT
  static AffineExpr Param(ParamId id, const Rational& coeff = 1);

  const Rational& constant() const { return constant_; }
  Rational coefficient(ParamId id) const;
  const std::vector<std::pair<ParamId, Rational>>& terms() const {
    return terms_;
  }
  bool is_constant() const { return terms_.empty(); }
  bool depends_on(ParamId id) const;

  AffineExpr& operator+=(const AffineExpr& o);
  AffineExpr& operator-=(const AffineExpr& o);
  AffineExpr& operator*=(const Rational& k);
  friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
  friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
  friend AffineExpr operator*(AffineExpr a, const Rational& k) { return a *= k; }
  AffineExpr operator-() const { return AffineExpr(*this) *= Rational(-1); }
  bool operator==(const AffineExpr& o) const = default;

  AffineExpr substitute(ParamId id, const AffineExpr& value) const;
  Rational evaluate(const Assignment& values) const;
  std::string to_string() const;

 private:
  Rational constant_ = 0;
  std::vector<std::pair<ParamId, Rational>> terms_;  // sorted by id, nonzero
};

}  // namespace foldtree
