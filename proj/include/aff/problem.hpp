#pragma once

#include <string_view>

#include "aff/group.hpp"

namespace aff {

enum class CurvSign { Neg, Zero, Pos };

// Coefficient matrix of the Lorentzian form
//   g(u) = -(a*u1 + b*u2)^2 + (c*u1 + d*u2)^2
// on the left-invariant frame; det = a*d - b*c must be positive.
struct ProblemMatrix {
  double a, b, c, d;
  double det() const { return a * d - b * c; }
};

// One left-invariant Lorentzian problem with every derived constant the
// closed-form machinery consumes, computed once at construction.
struct ProblemSpec {
  ProblemMatrix A{1, 0, 0, 1};
  bool timeReversed = false;  // input matrix had a < 0 and was negated

  // entries of A^{-1}
  double alpha = 1, beta = 0, gamma = 0, delta = 1;

  // frame Gram values g(X1), g(X1,X2), g(X2)
  double g11 = -1, g12 = 0, g22 = 1;

  double K = -1;
  CurvSign curvSign = CurvSign::Neg;

  // K != 0: Delta = sqrt(|delta^2 - gamma^2|), hyperbolic angle theta,
  // chart coefficients lam = (alpha*delta - beta*gamma)/Delta^2 > 0 and
  // nu = (beta*delta - alpha*gamma)/Delta^2
  double Delta = 1, theta = 0, lam = 1, nu = 0;

  // K == 0 chart coefficients
  double f = 0, g = 0;

  // sgn(gamma); meaningful for K >= 0 only
  int s1 = 1;
};

// Validates and normalizes the matrix (det > 0 required; a < 0 is negated
// with timeReversed recorded) and precomputes all derived constants.
ProblemSpec make_problem(double a, double b, double c, double d);

// "P1", "P2", "P3" model problems.
ProblemSpec preset(std::string_view name);

// Affine stratum functions vanishing at Id.
double lambda1(const ProblemSpec& s, const GroupPoint& q);
double lambda2(const ProblemSpec& s, const GroupPoint& q);

// Linear factors of the form: g = l1 * l2.
double l1_form(const ProblemSpec& s, const TangentVector& v);
double l2_form(const ProblemSpec& s, const TangentVector& v);

double lorentz_form(const ProblemSpec& s, const TangentVector& v);
double lorentz_pair(const ProblemSpec& s, const TangentVector& v, const TangentVector& w);

}  // namespace aff
