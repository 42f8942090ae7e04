#pragma once

// Shared random generators for the test suites. Matrices are kept well
// conditioned so closed-form/ODE comparisons stay in the smooth regime.

#include <cmath>
#include <random>

#include "aff/geodesics.hpp"
#include "aff/problem.hpp"

namespace testsupport {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline aff::ProblemSpec random_spec(std::mt19937_64& rng, aff::CurvSign sign) {
  for (;;) {
    double a = uniform(rng, 0.4, 2.0);
    double c = 0.0;
    switch (sign) {
      case aff::CurvSign::Neg:
        c = a * uniform(rng, -0.7, 0.7);
        break;
      case aff::CurvSign::Pos:
        c = (rng() & 1 ? 1.0 : -1.0) * a * uniform(rng, 1.35, 2.2);
        break;
      case aff::CurvSign::Zero:
        c = (rng() & 1 ? 1.0 : -1.0) * a;  // exact flat stratum
        break;
    }
    const double b = uniform(rng, -1.5, 1.5);
    const double d = uniform(rng, -1.5, 1.5);
    const double det = a * d - b * c;
    if (det < 0.3 || det > 8.0) continue;
    aff::ProblemSpec s = aff::make_problem(a, b, c, d);
    if (s.curvSign != sign) continue;
    return s;
  }
}

// Initial vertical coordinates keeping |psi0 + theta| (or |psi0| when flat)
// in a band where the chart stays well conditioned.
inline double random_psi0(std::mt19937_64& rng, const aff::ProblemSpec& s) {
  const double mag = uniform(rng, 0.05, 1.1);
  const double sign = rng() & 1 ? 1.0 : -1.0;
  if (s.curvSign == aff::CurvSign::Zero) return sign * mag;
  return sign * mag - s.theta;
}

// Time horizon for forward integration tests.
inline double horizon(const aff::ProblemSpec& s, double psi0, double cap = 10.0) {
  const auto [lo, hi] = aff::domain_bounds(s, psi0);
  (void)lo;
  return 0.9 * std::min(hi, cap);
}

inline aff::GroupPoint random_interior(std::mt19937_64& rng, const aff::ProblemSpec& s,
                                       double tCap = 2.5) {
  const double psi0 = random_psi0(rng, s);
  const auto [lo, hi] = aff::domain_bounds(s, psi0);
  (void)lo;
  const double t = uniform(rng, 0.05, 0.9) * std::min(hi, tCap);
  return aff::exp_map(s, psi0, t);
}

inline aff::GroupPoint random_point(std::mt19937_64& rng, double xr = 3.0, double yLo = 0.2,
                                    double yHi = 4.0) {
  return {uniform(rng, -xr, xr), uniform(rng, yLo, yHi)};
}

}  // namespace testsupport
