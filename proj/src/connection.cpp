#include "aff/connection.hpp"

namespace aff {

ConnectionCoefficients levi_civita(const ProblemSpec& s) {
  const double det = s.A.det();
  const double inv = -1.0 / (det * det);
  const double g11 = s.g11, g12 = s.g12, g22 = s.g22;
  ConnectionCoefficients cc;
  cc.g11 = g11;
  cc.g12 = g12;
  cc.g22 = g22;
  cc.mu[0][0] = inv * (-g12 * g11);
  cc.nu[0][0] = inv * (g11 * g11);
  cc.mu[0][1] = inv * (-g22 * g11);
  cc.nu[0][1] = inv * (g12 * g11);
  cc.mu[1][0] = inv * (-g12 * g12);
  cc.nu[1][0] = inv * (g11 * g12);
  cc.mu[1][1] = inv * (-g22 * g12);
  cc.nu[1][1] = inv * (g12 * g12);
  return cc;
}

double sectional_curvature_numeric(const ProblemSpec& s) {
  const ConnectionCoefficients c = levi_civita(s);

  // frame-coefficient arithmetic; everything below is a pair (X1, X2) coeff
  struct V {
    double a1, a2;
  };
  auto D = [&](int i, const V& v) {  // D_{Xi} of a constant-coefficient field
    return V{v.a1 * c.mu[i][0] + v.a2 * c.mu[i][1],
             v.a1 * c.nu[i][0] + v.a2 * c.nu[i][1]};
  };
  const V x1{1.0, 0.0};

  // R_{X1 X2} X1 = D_{[X1,X2]} X1 - D_{X1} D_{X2} X1 + D_{X2} D_{X1} X1,
  // with [X1, X2] = -X1.
  const V d1x1 = D(0, x1);
  const V d2x1 = D(1, x1);
  const V t1{-d1x1.a1, -d1x1.a2};
  const V t2 = D(0, d2x1);
  const V t3 = D(1, d1x1);
  const V r{t1.a1 - t2.a1 + t3.a1, t1.a2 - t2.a2 + t3.a2};

  const double g_r_x2 = r.a1 * c.g12 + r.a2 * c.g22;
  const double Q = c.g11 * c.g22 - c.g12 * c.g12;  // = -det^2 < 0
  return g_r_x2 / Q;
}

}  // namespace aff
