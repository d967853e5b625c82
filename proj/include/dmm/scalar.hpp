#pragma once

#include <cmath>
#include <compare>

#include "dmm/errors.hpp"

namespace dmm {

// A finite real number with an exact zero and an exact one.
//
// Construction rejects NaN and infinities, and canonicalizes -0.0 to +0.0,
// so for every representable value x the identities 0*x == 0, 1*x == x and
// x + 0 == x hold bit-exactly.
class Scalar {
 public:
  constexpr Scalar() = default;

  Scalar(double v) : v_(v) {
    if (!std::isfinite(v_)) throw ValueError("non-finite scalar");
    if (v_ == 0.0) v_ = 0.0;  // canonical zero: never store -0.0
  }

  double value() const { return v_; }
  bool is_zero() const { return v_ == 0.0; }

  friend Scalar operator+(Scalar a, Scalar b) { return Scalar(a.v_ + b.v_); }
  friend Scalar operator-(Scalar a, Scalar b) { return Scalar(a.v_ - b.v_); }
  friend Scalar operator*(Scalar a, Scalar b) { return Scalar(a.v_ * b.v_); }
  Scalar operator-() const { return Scalar(-v_); }

  bool operator==(const Scalar&) const = default;
  auto operator<=>(const Scalar&) const = default;

 private:
  double v_ = 0.0;
};

}  // namespace dmm
