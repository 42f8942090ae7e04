#pragma once

#include <array>
#include <functional>

#include "aff/problem.hpp"

namespace aff {

// Coordinate components (coefficients of d/dx and d/dy) of a vector field.
struct FieldValue {
  double dx;
  double dy;
};

// Row-major jacobian of the coefficient functions:
// [d(dx)/dx, d(dx)/dy, d(dy)/dx, d(dy)/dy].
using FieldJacobian = std::array<double, 4>;

// Closed-form vector field: coefficients and their exact derivatives.
struct VectorField {
  std::function<FieldValue(const GroupPoint&)> value;
  std::function<FieldJacobian(const GroupPoint&)> jacobian;
};

enum class KillingTag { RightX1, RightX2, Extra };

struct KillingField {
  KillingTag tag;
  bool complete;  // the extra field is not complete; flows must avoid it
  VectorField field;
};

// Right-invariant fields d/dx, x d/dx + y d/dy and the curvature-matched
// third Killing field (vanishes at Id, tangent to the spheres).
std::array<KillingField, 3> killing_basis(const ProblemSpec& s);

// Exact Lie bracket [F, G] evaluated at q from the closed-form jacobians.
FieldValue lie_bracket(const VectorField& F, const VectorField& G, const GroupPoint& q);

// Max over frame pairs (V, W) of |X g(V,W) - g([X,V],W) - g(V,[X,W])|,
// the directional derivative taken by central differences. Near zero for
// Killing fields.
double killing_residual(const ProblemSpec& s, const VectorField& X, const GroupPoint& q);

// Left-invariant frame fields in coordinates and a non-Killing control.
VectorField frame_x1();
VectorField frame_x2();
VectorField probe_field();  // y^2 d/dx

// Image point of the flat isometric embedding into the Minkowski plane
// with form -dxt^2 + dyt^2 (xt timelike, future along +xt).
struct MinkowskiPoint {
  double xt;
  double yt;
};

MinkowskiPoint embed_flat(const ProblemSpec& s, const GroupPoint& q);

// Minkowski time separation: sqrt(dxt^2 - dyt^2) for future-directed
// timelike displacements, otherwise 0.
double minkowski_distance(const MinkowskiPoint& p, const MinkowskiPoint& q);

// Positive-definite membership margin of the embedding half-plane;
// equals 1/y for image points.
double half_plane_margin(const ProblemSpec& s, const MinkowskiPoint& p);

}  // namespace aff
