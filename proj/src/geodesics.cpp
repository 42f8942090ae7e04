#include "aff/geodesics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "aff/errors.hpp"

namespace aff {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBranchEps = 1e-12;  // case 2.1 vs 2.2 dispatch on |psi0 + theta|

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// ln(coth(x/2)) for x > 0; decreasing self-inverse bijection of (0, inf).
// Relates the positive-curvature chart value to the vertical coordinate in
// both directions: rho = L(|mu0|) and |mu(tau)| = L(tau).
double ln_coth_half(double x) { return -std::log(std::tanh(0.5 * x)); }

[[noreturn]] void domain_error(double t) {
  throw DomainExceeded("parameter t = " + std::to_string(t) +
                       " is outside the maximal geodesic domain");
}

}  // namespace

double chart_rho(const ProblemSpec& s, double psi0) {
  switch (s.curvSign) {
    case CurvSign::Neg:
      return std::atan(std::sinh(psi0 + s.theta));
    case CurvSign::Pos: {
      const double mu0 = psi0 + s.theta;
      if (std::abs(mu0) <= kBranchEps) return kInf;  // straight-line case
      return ln_coth_half(std::abs(mu0));
    }
    case CurvSign::Zero:
      return std::exp(-s.s1 * psi0);
  }
  return 0.0;
}

std::pair<double, double> domain_bounds(const ProblemSpec& s, double psi0) {
  const double rho = chart_rho(s, psi0);
  switch (s.curvSign) {
    case CurvSign::Neg:
      return {-(kPi / 2 + rho) / s.Delta, (kPi / 2 - rho) / s.Delta};
    case CurvSign::Pos: {
      if (std::isinf(rho)) return {-kInf, kInf};  // psi0 + theta = 0
      if (s.gamma > 0.0) return {-kInf, rho / s.Delta};
      return {-rho / s.Delta, kInf};
    }
    case CurvSign::Zero:
      if (s.gamma > 0.0) return {-kInf, rho / s.gamma};
      return {rho / s.gamma, kInf};
  }
  return {0.0, 0.0};
}

Geodesic timelike_geodesic(const ProblemSpec& s, double psi0) {
  Geodesic g;
  g.spec = s;
  g.timelike = true;
  g.psi0 = psi0;
  const auto [lo, hi] = domain_bounds(s, psi0);
  g.tMin = lo;
  g.tMax = hi;
  return g;
}

Geodesic lightlike_geodesic(const ProblemSpec& s, int sign) {
  Geodesic g;
  g.spec = s;
  g.timelike = false;
  g.lightSign = sign >= 0 ? 1 : -1;
  g.tMin = -kInf;
  g.tMax = kInf;
  return g;
}

GroupPoint chart_point(const ProblemSpec& s, double rho, double tau) {
  if (s.curvSign != CurvSign::Neg)
    throw WrongCurvature("chart_point is defined for negative curvature only");
  // x written with the difference sin(tau - rho) and the half-angle form of
  // cos(rho) - cos(tau) so that t = 0 lands exactly on Id
  const double x = (s.lam * std::sin(tau - rho) +
                    2.0 * s.nu * std::sin(0.5 * (tau + rho)) * std::sin(0.5 * (tau - rho))) /
                   std::cos(tau);
  const double y = std::cos(rho) / std::cos(tau);
  return {x, y};
}

GroupPoint exp_map(const ProblemSpec& s, double psi0, double t) {
  switch (s.curvSign) {
    case CurvSign::Neg: {
      const double rho = chart_rho(s, psi0);
      const double tau = rho + s.Delta * t;
      if (!(std::abs(tau) < kPi / 2)) domain_error(t);
      return chart_point(s, rho, tau);
    }
    case CurvSign::Pos: {
      const double mu0 = psi0 + s.theta;
      const double sigma = s.s1 * s.Delta * t;
      if (std::abs(mu0) <= kBranchEps) {
        return {-s.nu * std::expm1(sigma), std::exp(sigma)};
      }
      const int s2 = sgn(mu0);
      const double rho = ln_coth_half(std::abs(mu0));
      const double tau = rho - sigma;
      if (!(tau > 0.0)) domain_error(t);
      const double y = std::sinh(rho) / std::sinh(tau);
      // sign of the lam term fixed against the Hamiltonian-flow oracle
      const double x = s.nu * (1.0 - y) - s2 * s.lam * std::sinh(sigma) / std::sinh(tau);
      return {x, y};
    }
    case CurvSign::Zero: {
      const double rho = std::exp(-s.s1 * psi0);
      const double tau = rho - s.gamma * t;
      if (!(tau > 0.0)) domain_error(t);
      const double y = rho / tau;
      const double x = -s.gamma * t * (s.f * rho + s.g / tau);
      return {x, y};
    }
  }
  throw std::logic_error("unreachable");
}

double psi_of_t(const Geodesic& geo, double t) {
  if (!geo.timelike)
    throw std::invalid_argument("psi_of_t requires a timelike geodesic");
  if (!(t > geo.tMin && t < geo.tMax)) domain_error(t);
  const ProblemSpec& s = geo.spec;
  switch (s.curvSign) {
    case CurvSign::Neg: {
      const double tau = chart_rho(s, geo.psi0) + s.Delta * t;
      return std::asinh(std::tan(tau)) - s.theta;
    }
    case CurvSign::Pos: {
      const double mu0 = geo.psi0 + s.theta;
      if (std::abs(mu0) <= kBranchEps) return -s.theta;
      const double tau = ln_coth_half(std::abs(mu0)) - s.s1 * s.Delta * t;
      return sgn(mu0) * ln_coth_half(tau) - s.theta;
    }
    case CurvSign::Zero: {
      const double tau = std::exp(-s.s1 * geo.psi0) - s.gamma * t;
      return -s.s1 * std::log(tau);
    }
  }
  throw std::logic_error("unreachable");
}

GroupPoint geodesic_point(const Geodesic& geo, double t) {
  if (geo.timelike) {
    if (!(t > geo.tMin && t < geo.tMax)) domain_error(t);
    return exp_map(geo.spec, geo.psi0, t);
  }
  return lightlike_curve(geo.spec, geo.lightSign, t);
}

GroupPoint lightlike_curve(const ProblemSpec& s, int sign, double t) {
  const double sg = sign >= 0 ? 1.0 : -1.0;
  return lie_exp({s.alpha + sg * s.beta, s.gamma + sg * s.delta}, t);
}

CompletenessReport completeness_report(const ProblemSpec& s) {
  if (s.curvSign == CurvSign::Neg) return {false, false};
  if (s.gamma > 0.0) return {false, true};
  if (s.gamma < 0.0) return {true, false};
  throw UnresolvedCase("completeness is not classified for K >= 0 with gamma = 0");
}

}  // namespace aff
