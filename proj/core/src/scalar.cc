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

#include "foldtree/scalar.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "foldtree/error.h"

namespace foldtree {

Scalar Scalar::Approx(double v) {
  Scalar s;
  s.exact_.reset();
  s.value_ = v;
  return s;
}

const Rational& Scalar::exact() const {
  if (!exact_) throw Error(ErrorCode::kInexactPolygon, "value is not exact");
  return *exact_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_exact() && o.is_exact()) return Scalar(*exact_ + *o.exact_);
  return Approx(value_ + o.value_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (is_exact() && o.is_exact()) return Scalar(*exact_ - *o.exact_);
  return Approx(value_ - o.value_);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-*exact_));
  return Approx(-value_);
}

Scalar Scalar::operator*(const Rational& k) const {
  if (is_exact()) return Scalar(Rational(*exact_ * k));
  return Approx(value_ * to_double(k));
}

std::string Scalar::to_string() const {
  if (is_exact()) return foldtree::to_string(*exact_);
  std::ostringstream out;
  out.precision(17);
  out << value_;
  return out.str();
}

int compare(const Scalar& a, const Scalar& b, double eps) {
  if (a.is_exact() && b.is_exact()) {
    const Rational& x = a.exact();
    const Rational& y = b.exact();
    return x < y ? -1 : (y < x ? 1 : 0);
  }
  double d = a.value() - b.value();
  if (std::abs(d) <= eps) return 0;
  return d < 0 ? -1 : 1;
}

Angle Angle::Radians(double r) {
  return Angle(Scalar::Approx(r / std::numbers::pi));
}

double Angle::radians() const { return pi_units_.value() * std::numbers::pi; }

std::string Angle::to_string() const {
  return pi_units_.to_string() + "pi";
}

}  // namespace foldtree
