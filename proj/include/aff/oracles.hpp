#pragma once

#include <vector>

#include "aff/problem.hpp"

namespace aff {

// Fixed-step RK4 integration of the normal Hamiltonian system in the
// variables (h1, h2, x, y); the energy (h1^2 - h2^2)/2 = 1/2 is conserved
// by the flow and its drift measures integration quality.
struct IntegratedExtremal {
  std::vector<double> t;
  std::vector<double> psi;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> h1;
  std::vector<double> h2;
  double step;
  double hamiltonianDrift;

  GroupPoint endpoint() const { return {x.back(), y.back()}; }
};

IntegratedExtremal integrate_extremal(const ProblemSpec& s, double psi0, double t1, int steps);

// Best admissible piecewise-constant-control path found for a target,
// a certified lower bound on the Lorentzian distance.
struct PathLowerBound {
  double value = 0.0;
  std::vector<double> controls;   // hyperbolic control angle per piece
  std::vector<double> durations;  // arclength parametrization: length = sum
  int nSteps = 0;
  int nControls = 0;
  double phiRange = 0.0;
  double missDistance = 0.0;  // endpoint residual in group coordinates
};

// Maximizes length over ladders of controls drawn from a grid of nControls
// angles in [-phiRange, phiRange] across nSteps pieces; piece durations are
// found by scan plus bisection so the path lands on the target.
PathLowerBound brute_force_distance(const ProblemSpec& s, const GroupPoint& q1, int nSteps,
                                    int nControls, double phiRange = 3.0,
                                    double maxLength = 0.0);

// Central-difference Jacobian of the negative-curvature chart map, in the
// order d(x,y)/d(tau,rho); adjudicates the closed form in jacobian_exp.
double finite_diff_jacobian(const ProblemSpec& s, double rho, double tau, double step = 1e-5);

}  // namespace aff
