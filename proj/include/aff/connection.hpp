#pragma once

#include "aff/problem.hpp"

namespace aff {

// Levi-Civita connection on the left-invariant frame:
// D_{Xi}Xj = mu[i][j]*X1 + nu[i][j]*X2 (indices 0-based).
// The coefficients are constant over the group.
struct ConnectionCoefficients {
  double mu[2][2];
  double nu[2][2];
  double g11, g12, g22;
};

ConnectionCoefficients levi_civita(const ProblemSpec& s);

// Sectional curvature evaluated algebraically on the frame pair (X1, X2)
// from the connection coefficients; independent oracle for ProblemSpec::K.
double sectional_curvature_numeric(const ProblemSpec& s);

}  // namespace aff
