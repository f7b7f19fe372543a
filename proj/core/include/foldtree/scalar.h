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
#include <string>

#include "foldtree/rational.h"

namespace foldtree {

inline constexpr double kDefaultEpsilon = 1e-9;

// A real number that is either an exact rational or a floating-point value.
// Arithmetic stays exact while both operands are exact.
class Scalar {
 public:
  Scalar() : exact_(Rational(0)), value_(0.0) {}
  Scalar(const Rational& r) : exact_(r), value_(to_double(r)) {}  // NOLINT
  Scalar(int v) : Scalar(Rational(v)) {}                           // NOLINT
  static Scalar Approx(double v);

  bool is_exact() const { return exact_.has_value(); }
  const Rational& exact() const;
  double value() const { return value_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Rational& k) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }

  std::string to_string() const;

 private:
  std::optional<Rational> exact_;
  double value_;
};

// Three-way comparison: exact when both are exact, otherwise equal within eps.
int compare(const Scalar& a, const Scalar& b, double eps = kDefaultEpsilon);

using Length = Scalar;

// An angle stored in units of pi, so pi/2 is held as the rational 1/2.
class Angle {
 public:
  Angle() = default;
  static Angle PiTimes(const Rational& r) { return Angle(Scalar(r)); }
  static Angle Radians(double r);
  explicit Angle(Scalar pi_units) : pi_units_(std::move(pi_units)) {}

  const Scalar& pi_units() const { return pi_units_; }
  bool is_exact() const { return pi_units_.is_exact(); }
  double radians() const;
  std::string to_string() const;

 private:
  Scalar pi_units_;
};

}  // namespace foldtree
