#pragma once

#include <cmath>
#include <stdexcept>

namespace aff {

// Element (x, y), y > 0, of the group of proper affine maps a -> y*a + x
// of the real line. The group is the open upper half-plane with product
// (x2, y2) * (x1, y1) = (x2 + y2*x1, y2*y1) and identity (0, 1).
struct GroupPoint {
  GroupPoint(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0))
      throw std::invalid_argument("GroupPoint requires finite coordinates with y > 0");
  }

  static GroupPoint identity() { return {0.0, 1.0}; }

  double x;
  double y;
};

// Tangent vector u1*X1 + u2*X2 in the left-invariant frame
// X1 = y d/dx, X2 = y d/dy.
struct TangentVector {
  double u1 = 0.0;
  double u2 = 0.0;
};

GroupPoint group_mul(const GroupPoint& p, const GroupPoint& q);
GroupPoint group_inv(const GroupPoint& p);

// Alias of group_mul(g, q); distance code reads d(q0, q1) = d(Id, q0^{-1} q1).
GroupPoint left_translate(const GroupPoint& g, const GroupPoint& q);

// One-parameter subgroup through Id with initial velocity v, evaluated at
// time t. Continuous across u2 = 0.
GroupPoint lie_exp(const TangentVector& v, double t);

}  // namespace aff
