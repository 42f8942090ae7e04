#include "aff/isometry.hpp"

#include <algorithm>
#include <cmath>

#include "aff/errors.hpp"

namespace aff {

namespace {

VectorField extra_field(const ProblemSpec& s) {
  switch (s.curvSign) {
    case CurvSign::Neg: {
      const double lam = s.lam, nu = s.nu;
      return {
          [lam, nu](const GroupPoint& q) {
            const double w = (q.x - nu * (q.y - 1.0)) / lam;
            return FieldValue{lam * (q.y * q.y + w * w - 1.0) + 2.0 * nu * w * q.y,
                              2.0 * w * q.y};
          },
          [lam, nu](const GroupPoint& q) {
            const double w = (q.x - nu * (q.y - 1.0)) / lam;
            return FieldJacobian{2.0 * w + 2.0 * nu * q.y / lam,
                                 2.0 * q.y * (lam * lam - nu * nu) / lam,
                                 2.0 * q.y / lam,
                                 2.0 * w - 2.0 * nu * q.y / lam};
          }};
    }
    case CurvSign::Pos: {
      const double lam = s.lam, nu = s.nu;
      return {
          [lam, nu](const GroupPoint& q) {
            const double w = (q.x + nu * (q.y - 1.0)) / lam;
            return FieldValue{lam * (q.y * q.y + w * w - 1.0) - 2.0 * nu * w * q.y,
                              2.0 * w * q.y};
          },
          [lam, nu](const GroupPoint& q) {
            const double w = (q.x + nu * (q.y - 1.0)) / lam;
            return FieldJacobian{2.0 * w - 2.0 * nu * q.y / lam,
                                 2.0 * q.y * (lam * lam - nu * nu) / lam,
                                 2.0 * q.y / lam,
                                 2.0 * w + 2.0 * nu * q.y / lam};
          }};
    }
    case CurvSign::Zero: {
      const double g = s.g;
      return {
          [g](const GroupPoint& q) {
            return FieldValue{q.x + g * (q.y * q.y - 1.0), q.y * (1.0 - q.y)};
          },
          [g](const GroupPoint& q) {
            return FieldJacobian{1.0, 2.0 * g * q.y, 0.0, 1.0 - 2.0 * q.y};
          }};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::array<KillingField, 3> killing_basis(const ProblemSpec& s) {
  VectorField x1{[](const GroupPoint&) { return FieldValue{1.0, 0.0}; },
                 [](const GroupPoint&) { return FieldJacobian{0, 0, 0, 0}; }};
  VectorField x2{[](const GroupPoint& q) { return FieldValue{q.x, q.y}; },
                 [](const GroupPoint&) { return FieldJacobian{1, 0, 0, 1}; }};
  return {KillingField{KillingTag::RightX1, true, std::move(x1)},
          KillingField{KillingTag::RightX2, true, std::move(x2)},
          KillingField{KillingTag::Extra, false, extra_field(s)}};
}

FieldValue lie_bracket(const VectorField& F, const VectorField& G, const GroupPoint& q) {
  const FieldValue f = F.value(q), g = G.value(q);
  const FieldJacobian jf = F.jacobian(q), jg = G.jacobian(q);
  return {jg[0] * f.dx + jg[1] * f.dy - jf[0] * g.dx - jf[1] * g.dy,
          jg[2] * f.dx + jg[3] * f.dy - jf[2] * g.dx - jf[3] * g.dy};
}

VectorField frame_x1() {
  return {[](const GroupPoint& q) { return FieldValue{q.y, 0.0}; },
          [](const GroupPoint&) { return FieldJacobian{0, 1, 0, 0}; }};
}

VectorField frame_x2() {
  return {[](const GroupPoint& q) { return FieldValue{0.0, q.y}; },
          [](const GroupPoint&) { return FieldJacobian{0, 0, 0, 1}; }};
}

VectorField probe_field() {
  return {[](const GroupPoint& q) { return FieldValue{q.y * q.y, 0.0}; },
          [](const GroupPoint& q) -> FieldJacobian { return {0, 2.0 * q.y, 0, 0}; }};
}

double killing_residual(const ProblemSpec& s, const VectorField& X, const GroupPoint& q) {
  const VectorField frames[2] = {frame_x1(), frame_x2()};
  const FieldValue Xq = X.value(q);
  const double h = 1e-5 / (1.0 + std::hypot(Xq.dx, Xq.dy));

  auto frame_coords = [](const FieldValue& v, const GroupPoint& p) {
    return TangentVector{v.dx / p.y, v.dy / p.y};
  };
  auto gram = [&](const VectorField& V, const VectorField& W, const GroupPoint& p) {
    return lorentz_pair(s, frame_coords(V.value(p), p), frame_coords(W.value(p), p));
  };

  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const GroupPoint qp{q.x + h * Xq.dx, q.y + h * Xq.dy};
      const GroupPoint qm{q.x - h * Xq.dx, q.y - h * Xq.dy};
      const double deriv =
          (gram(frames[i], frames[j], qp) - gram(frames[i], frames[j], qm)) / (2.0 * h);

      const TangentVector bi = frame_coords(lie_bracket(X, frames[i], q), q);
      const TangentVector bj = frame_coords(lie_bracket(X, frames[j], q), q);
      const TangentVector ei{i == 0 ? 1.0 : 0.0, i == 0 ? 0.0 : 1.0};
      const TangentVector ej{j == 0 ? 1.0 : 0.0, j == 0 ? 0.0 : 1.0};
      const double rhs = lorentz_pair(s, bi, ej) + lorentz_pair(s, ei, bj);
      worst = std::max(worst, std::abs(deriv - rhs));
    }
  }
  return worst;
}

MinkowskiPoint embed_flat(const ProblemSpec& s, const GroupPoint& q) {
  if (s.curvSign != CurvSign::Zero)
    throw WrongCurvature("the isometric embedding exists for flat structures only");
  const double w = (q.x + s.g * (q.y - 1.0)) / s.f;
  const double u = (1.0 - 1.0 / q.y) / s.gamma;
  const double v = -w / s.gamma;
  return {0.5 * (u + v), 0.5 * s.s1 * (u - v)};
}

double minkowski_distance(const MinkowskiPoint& p, const MinkowskiPoint& q) {
  const double dt = q.xt - p.xt;
  const double ds = q.yt - p.yt;
  const double m = dt * dt - ds * ds;
  return (dt > 0.0 && m > 0.0) ? std::sqrt(m) : 0.0;
}

double half_plane_margin(const ProblemSpec& s, const MinkowskiPoint& p) {
  return 1.0 - s.gamma * (s.s1 * p.yt + p.xt);
}

}  // namespace aff
