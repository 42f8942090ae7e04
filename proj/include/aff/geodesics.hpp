#pragma once

#include <utility>

#include "aff/problem.hpp"

namespace aff {

// Arclength-parametrized normal extremal (timelike) or abnormal extremal
// (lightlike) with its maximal parameter domain; tMin < 0 < tMax.
struct Geodesic {
  ProblemSpec spec;
  bool timelike = true;
  double psi0 = 0.0;  // initial vertical coordinate, timelike only
  int lightSign = 1;  // +1 / -1, lightlike only
  double tMin = 0.0;
  double tMax = 0.0;
};

Geodesic timelike_geodesic(const ProblemSpec& s, double psi0);
Geodesic lightlike_geodesic(const ProblemSpec& s, int sign);

// Maximal domain of the timelike extremal with the given initial vertical
// coordinate; infinite endpoints where the flow is complete.
std::pair<double, double> domain_bounds(const ProblemSpec& s, double psi0);

// Vertical coordinate along a timelike geodesic; psi(0) == psi0.
double psi_of_t(const Geodesic& geo, double t);

// Closed-form endpoint of the timelike extremal: exp_map(s, psi0, 0) = Id.
GroupPoint exp_map(const ProblemSpec& s, double psi0, double t);

GroupPoint geodesic_point(const Geodesic& geo, double t);

// Abnormal extremal: the one-parameter subgroup with control
// (alpha +- beta, gamma +- delta); fills the light cone boundary.
GroupPoint lightlike_curve(const ProblemSpec& s, int sign, double t);

struct CompletenessReport {
  bool futureComplete;
  bool pastComplete;
};
CompletenessReport completeness_report(const ProblemSpec& s);

// Negative-curvature chart (rho, tau) -> (x, y); tau = rho at t = 0.
// Exposed for the Jacobian oracle and sphere sampling.
GroupPoint chart_point(const ProblemSpec& s, double rho, double tau);
double chart_rho(const ProblemSpec& s, double psi0);

}  // namespace aff
