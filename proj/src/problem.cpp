#include "aff/problem.hpp"

#include <cmath>
#include <string>

#include "aff/errors.hpp"

namespace aff {

namespace {
constexpr double kDetEps = 1e-12;
constexpr double kCurvEps = 1e-12;
constexpr double kFlatEps = 1e-12;

int sgn(double v) { return (v > 0.0) - (v < 0.0); }
}  // namespace

ProblemSpec make_problem(double a, double b, double c, double d) {
  const double scale = a * a + b * b + c * c + d * d;
  const double det = a * d - b * c;
  if (!std::isfinite(det) || scale == 0.0 || std::abs(det) <= kDetEps * scale)
    throw DegenerateMatrix("matrix determinant vanishes");
  if (det < 0.0)
    throw OrientationViolation("matrix determinant must be positive");

  ProblemSpec s;
  s.timeReversed = false;
  if (a < 0.0) {
    // normalization u -> -u, A -> -A, t -> -t; det is unchanged for 2x2
    a = -a;
    b = -b;
    c = -c;
    d = -d;
    s.timeReversed = true;
  }
  s.A = {a, b, c, d};
  s.alpha = d / det;
  s.beta = -b / det;
  s.gamma = -c / det;
  s.delta = a / det;

  s.g11 = c * c - a * a;
  s.g12 = c * d - a * b;
  s.g22 = d * d - b * b;
  s.K = s.g11 / (det * det);

  if (std::abs(s.g11) <= kCurvEps * (a * a + c * c))
    s.curvSign = CurvSign::Zero;
  else
    s.curvSign = s.g11 < 0.0 ? CurvSign::Neg : CurvSign::Pos;

  switch (s.curvSign) {
    case CurvSign::Neg: {
      // delta > |gamma| here, so theta is well defined
      s.Delta = std::sqrt(s.delta * s.delta - s.gamma * s.gamma);
      s.theta = std::asinh(s.gamma / s.Delta);
      s.lam = (s.alpha * s.delta - s.beta * s.gamma) / (s.Delta * s.Delta);
      s.nu = (s.beta * s.delta - s.alpha * s.gamma) / (s.Delta * s.Delta);
      s.s1 = 1;
      break;
    }
    case CurvSign::Pos: {
      s.Delta = std::sqrt(s.gamma * s.gamma - s.delta * s.delta);
      s.s1 = sgn(s.gamma);
      s.theta = std::asinh(s.s1 * s.delta / s.Delta);
      s.lam = (s.alpha * s.delta - s.beta * s.gamma) / (s.Delta * s.Delta);
      s.nu = (s.beta * s.delta - s.alpha * s.gamma) / (s.Delta * s.Delta);
      break;
    }
    case CurvSign::Zero: {
      s.s1 = sgn(s.gamma);
      s.f = -(s.alpha - s.s1 * s.beta) / (2.0 * s.gamma);
      s.g = -(s.alpha + s.s1 * s.beta) / (2.0 * s.gamma);
      if (std::abs(s.f) < kFlatEps)
        throw FlatDegenerate("flat problem with vanishing chart coefficient f");
      break;
    }
  }
  return s;
}

ProblemSpec preset(std::string_view name) {
  if (name == "P1") return make_problem(1.0, 0.0, 0.0, 1.0);
  if (name == "P2") return make_problem(0.0, 1.0, -1.0, 0.0);
  if (name == "P3") return make_problem(0.5, 0.5, -0.5, 0.5);
  throw std::invalid_argument("unknown preset: " + std::string(name));
}

double lambda1(const ProblemSpec& s, const GroupPoint& q) {
  return (s.A.c - s.A.a) * q.x + (s.A.d - s.A.b) * (q.y - 1.0);
}

double lambda2(const ProblemSpec& s, const GroupPoint& q) {
  return (s.A.c + s.A.a) * q.x + (s.A.d + s.A.b) * (q.y - 1.0);
}

double l1_form(const ProblemSpec& s, const TangentVector& v) {
  return (s.A.c - s.A.a) * v.u1 + (s.A.d - s.A.b) * v.u2;
}

double l2_form(const ProblemSpec& s, const TangentVector& v) {
  return (s.A.c + s.A.a) * v.u1 + (s.A.d + s.A.b) * v.u2;
}

double lorentz_form(const ProblemSpec& s, const TangentVector& v) {
  const double p = s.A.a * v.u1 + s.A.b * v.u2;
  const double q = s.A.c * v.u1 + s.A.d * v.u2;
  return -p * p + q * q;
}

double lorentz_pair(const ProblemSpec& s, const TangentVector& v, const TangentVector& w) {
  const double pv = s.A.a * v.u1 + s.A.b * v.u2;
  const double qv = s.A.c * v.u1 + s.A.d * v.u2;
  const double pw = s.A.a * w.u1 + s.A.b * w.u2;
  const double qw = s.A.c * w.u1 + s.A.d * w.u2;
  return -pv * pw + qv * qw;
}

}  // namespace aff
