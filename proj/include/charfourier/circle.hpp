// Copyright 2026 The charfourier Authors. All Rights Reserved.
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

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "charfourier/errors.hpp"

namespace charfourier {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Tolerance for accepting externally supplied unit-circle values.
inline constexpr double kUnitTolerance = 1e-9;

/// A point (re, im) of the unit circle S^1.
///
/// The type does not refuse off-circle values: sample containers must be able
/// to carry defective data so that validation can report it. Values produced
/// by from_angle, mul and div are on the circle to floating rounding.
struct UnitCircleValue {
  double re = 1.0;
  double im = 0.0;

  constexpr UnitCircleValue() = default;
  constexpr UnitCircleValue(double re_part, double im_part)
      : re(re_part), im(im_part) {}

  static UnitCircleValue identity() { return {1.0, 0.0}; }

  std::complex<double> to_complex() const { return {re, im}; }
  static UnitCircleValue from_complex(std::complex<double> z) {
    return {z.real(), z.imag()};
  }

  double modulus() const { return std::hypot(re, im); }

  // |modulus - 1|; +inf for non-finite components.
  double unit_defect() const {
    if (!std::isfinite(re) || !std::isfinite(im)) return HUGE_VAL;
    return std::abs(modulus() - 1.0);
  }

  bool is_unit(double tolerance = kUnitTolerance) const {
    return unit_defect() <= tolerance;
  }

  friend bool operator==(const UnitCircleValue&,
                         const UnitCircleValue&) = default;
};

namespace detail {

// Divide by the modulus. Zero or non-finite values are passed through
// untouched so that defects stay visible downstream.
inline UnitCircleValue renormalize(double re, double im) {
  const double r = std::hypot(re, im);
  if (!(r > 0.0) || !std::isfinite(r)) return {re, im};
  return {re / r, im / r};
}

}  // namespace detail

/// e^{i theta}. The angle is first reduced into [0, 2pi) so that whole turns
/// land exactly on the identity.
inline UnitCircleValue from_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw DomainError("from_angle: non-finite angle");
  }
  double reduced = std::fmod(theta, kTwoPi);
  if (reduced < 0.0) reduced += kTwoPi;
  return {std::cos(reduced), std::sin(reduced)};
}

/// e^{i 2pi t} for a fraction of a turn. Exact at quarter turns, which keeps
/// grid characters free of the sin(pi) ~ 1.2e-16 artifacts.
inline UnitCircleValue from_turns(double turns) {
  if (!std::isfinite(turns)) {
    throw DomainError("from_turns: non-finite argument");
  }
  double t = turns - std::floor(turns);
  if (t >= 1.0) t = 0.0;
  const double eighths = t * 8.0;
  if (eighths == std::floor(eighths)) {
    constexpr double h = std::numbers::sqrt2 / 2.0;
    static constexpr UnitCircleValue table[8] = {
        {1.0, 0.0}, {h, h}, {0.0, 1.0}, {-h, h},
        {-1.0, 0.0}, {-h, -h}, {0.0, -1.0}, {h, -h}};
    return table[static_cast<int>(eighths)];
  }
  return from_angle(kTwoPi * t);
}

inline UnitCircleValue mul(const UnitCircleValue& a, const UnitCircleValue& b) {
  return detail::renormalize(a.re * b.re - a.im * b.im,
                             a.re * b.im + a.im * b.re);
}

// a * conj(b); total on the circle since b is never zero there.
inline UnitCircleValue div(const UnitCircleValue& a, const UnitCircleValue& b) {
  return detail::renormalize(a.re * b.re + a.im * b.im,
                             a.im * b.re - a.re * b.im);
}

inline UnitCircleValue operator*(const UnitCircleValue& a,
                                 const UnitCircleValue& b) {
  return mul(a, b);
}

inline UnitCircleValue operator/(const UnitCircleValue& a,
                                 const UnitCircleValue& b) {
  return div(a, b);
}

inline UnitCircleValue conj(const UnitCircleValue& a) { return {a.re, -a.im}; }

/// The unique angle in [0, 2pi) of v. Throws InputError when v is further
/// than `tolerance` from the circle.
inline double principal_angle(const UnitCircleValue& v,
                              double tolerance = kUnitTolerance) {
  if (!v.is_unit(tolerance)) {
    throw InputError("principal_angle: value (" + std::to_string(v.re) + ", " +
                     std::to_string(v.im) + ") is off the unit circle");
  }
  double theta = std::atan2(v.im, v.re);
  if (theta < 0.0) theta += kTwoPi;
  // -tiny + 2pi rounds to 2pi.
  if (theta >= kTwoPi) theta = 0.0;
  return theta + 0.0;  // atan2 yields -0.0 for (1, -0.0)
}

}  // namespace charfourier
