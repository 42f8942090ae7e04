#include "aff/group.hpp"

namespace aff {

GroupPoint group_mul(const GroupPoint& p, const GroupPoint& q) {
  return {p.x + p.y * q.x, p.y * q.y};
}

GroupPoint group_inv(const GroupPoint& p) {
  return {-p.x / p.y, 1.0 / p.y};
}

GroupPoint left_translate(const GroupPoint& g, const GroupPoint& q) {
  return group_mul(g, q);
}

GroupPoint lie_exp(const TangentVector& v, double t) {
  const double a = v.u2 * t;
  const double y = std::exp(a);
  double x;
  if (std::abs(a) < 1e-6) {
    // series for (e^a - 1)/u2 * u1; avoids cancellation near u2 = 0
    x = v.u1 * t * (1.0 + a / 2.0 + a * a / 6.0);
  } else {
    x = v.u1 / v.u2 * std::expm1(a);
  }
  return {x, y};
}

}  // namespace aff
