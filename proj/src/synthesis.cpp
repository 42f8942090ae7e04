#include "aff/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "aff/errors.hpp"

namespace aff {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClampEps = 1e-12;

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// arcsin/arcosh arguments may overshoot their domain by rounding when the
// target was generated on an exact sphere or cone; clamp a thin band only.
double clamp_abs1(double v) {
  if (v > 1.0 && v < 1.0 + kClampEps * (1.0 + std::abs(v))) return 1.0;
  if (v < -1.0 && v > -1.0 - kClampEps * (1.0 + std::abs(v))) return -1.0;
  return v;
}

double clamp_ge1(double v) {
  if (v < 1.0 && v > 1.0 - kClampEps * (1.0 + std::abs(v))) return 1.0;
  return v;
}

double ln_coth_half(double x) { return -std::log(std::tanh(0.5 * x)); }

// Inverse on the interior stratum; the caller has already classified.
InverseResult invert_interior(const ProblemSpec& s, const GroupPoint& q1) {
  const double x = q1.x, y = q1.y;
  switch (s.curvSign) {
    case CurvSign::Neg: {
      const double w = (x - s.nu * (y - 1.0)) / s.lam;
      const double sinTau = clamp_abs1((y * y + w * w - 1.0) / (2.0 * y * w));
      const double sinRho = clamp_abs1((y * y - w * w - 1.0) / (2.0 * w));
      const double tau = std::asin(sinTau);
      const double rho = std::asin(sinRho);
      return {std::asinh(std::tan(rho)) - s.theta, (tau - rho) / s.Delta};
    }
    case CurvSign::Pos: {
      const double w = (x + s.nu * (y - 1.0)) / s.lam;
      if (std::abs(w) <= 1e-12 * (1.0 + y * y))
        return {-s.theta, s.s1 * std::log(y) / s.Delta};
      const int s2 = -s.s1 * sgn(w);  // w = -s2 sinh(sigma)/sinh(tau) forward
      const double coshRho = clamp_ge1(s2 * (1.0 - y * y + w * w) / (2.0 * w));
      const double coshTau = clamp_ge1(s2 * (1.0 - y * y - w * w) / (2.0 * y * w));
      const double rho = std::acosh(coshRho);
      const double tau = std::acosh(coshTau);
      return {s2 * ln_coth_half(rho) - s.theta, s.s1 * (rho - tau) / s.Delta};
    }
    case CurvSign::Zero: {
      const double w = (x + s.g * (y - 1.0)) / s.f;
      const double tau = std::sqrt(std::max(0.0, w / (y - y * y)));
      const double rho = std::sqrt(std::max(0.0, w * y / (1.0 - y)));
      return {-s.s1 * std::log(rho), (rho - tau) / s.gamma};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

InverseResult exp_inverse(const ProblemSpec& s, const GroupPoint& q1) {
  const CausalClass cc = classify(s, q1);
  if (cc.tag != Stratum::Interior)
    throw NotInDomain(std::string("exp_inverse requires an interior target, got stratum ") +
                      stratum_name(cc.tag));
  return invert_interior(s, q1);
}

DistanceResult distance(const ProblemSpec& s, const GroupPoint& q0, const GroupPoint& q1) {
  const GroupPoint rel = group_mul(group_inv(q0), q1);
  const CausalClass cc = classify(s, rel);
  DistanceResult r{0.0, cc.tag, cc.branch, false, std::nullopt};
  switch (cc.tag) {
    case Stratum::Outside:
      break;
    case Stratum::LightBoundary:
      r.maximizerExists = true;  // the lightlike connecting curve, length 0
      break;
    case Stratum::FrontierF:
      r.value = kPi / s.Delta;
      break;
    case Stratum::RegionE:
      r.value = std::numeric_limits<double>::infinity();
      break;
    case Stratum::Interior: {
      const InverseResult inv = invert_interior(s, rel);
      r.value = inv.t1;
      r.maximizerExists = true;
      r.geodesic = inv;
      break;
    }
  }
  return r;
}

SphereArc::SphereArc(const ProblemSpec& s, double radius, int samples, bool frontierRay,
                     double paramLo, double paramHi)
    : spec_(s),
      radius_(radius),
      samples_(samples),
      frontierRay_(frontierRay),
      sigma_(s.curvSign == CurvSign::Zero ? s.gamma * radius : s.Delta * radius),
      lo_(paramLo),
      hi_(paramHi) {}

GroupPoint SphereArc::point(int k) const {
  if (k < 0 || k >= samples_) throw std::out_of_range("sphere sample index");
  const double p = lo_ + (hi_ - lo_) * (k + 0.5) / samples_;
  if (frontierRay_) {
    // parametrized by y, log-spaced; x solves lambda1 = lambda1(B)
    const double y = std::exp(p);
    const double lam1B = (spec_.A.c - spec_.A.a) * (spec_.A.d + spec_.A.b) /
                             (spec_.A.c + spec_.A.a) -
                         (spec_.A.d - spec_.A.b);
    const double x = (lam1B - (spec_.A.d - spec_.A.b) * (y - 1.0)) / (spec_.A.c - spec_.A.a);
    return {x, y};
  }
  double psi0;
  switch (spec_.curvSign) {
    case CurvSign::Neg:
      psi0 = std::asinh(std::tan(p)) - spec_.theta;  // p is the chart angle rho
      break;
    case CurvSign::Pos:
    case CurvSign::Zero:
      psi0 = p;
      break;
    default:
      throw std::logic_error("unreachable");
  }
  return exp_map(spec_, psi0, radius_);
}

double SphereArc::hyperbola_residual(const GroupPoint& q) const {
  if (frontierRay_) return lambda3(spec_, q);
  switch (spec_.curvSign) {
    case CurvSign::Neg: {
      const double w = (q.x - spec_.nu * (q.y - 1.0)) / spec_.lam;
      const double c = std::cos(sigma_), sn = std::sin(sigma_);
      return w * w - (q.y - c) * (q.y - c) - sn * sn;
    }
    case CurvSign::Pos: {
      const double w = (q.x + spec_.nu * (q.y - 1.0)) / spec_.lam;
      const double c = std::cosh(sigma_), sh = std::sinh(sigma_);
      return (q.y - c) * (q.y - c) - w * w - sh * sh;
    }
    case CurvSign::Zero: {
      const double w = (q.x + spec_.g * (q.y - 1.0)) / spec_.f;
      return (w + sigma_ * sigma_) * q.y - w;
    }
  }
  throw std::logic_error("unreachable");
}

SphereArc sphere(const ProblemSpec& s, double radius, int samples) {
  if (!(radius > 0.0)) throw std::invalid_argument("sphere radius must be positive");
  if (samples < 1) throw std::invalid_argument("sphere needs at least one sample");

  if (s.curvSign == CurvSign::Neg) {
    const double dMax = kPi / s.Delta;
    if (radius > dMax * (1.0 + 1e-12))
      throw EmptySphere("no points at distance " + std::to_string(radius) +
                        "; the distance range is bounded by " + std::to_string(dMax));
    if (radius >= dMax * (1.0 - 1e-12))
      return SphereArc(s, dMax, samples, true, std::log(0.05), std::log(20.0));
    // admissible chart angles rho in (-pi/2, pi/2 - sigma), shrunk 2% a side
    const double sigma = s.Delta * radius;
    const double lo = -kPi / 2, hi = kPi / 2 - sigma;
    const double m = 0.02 * (hi - lo);
    return SphereArc(s, radius, samples, false, lo + m, hi - m);
  }

  if (s.curvSign == CurvSign::Pos) {
    if (s.gamma > 0.0) {
      // |psi0 + theta| < ln coth(sigma/2) keeps R inside the domain
      const double muMax = ln_coth_half(s.Delta * radius);
      const double m = 0.02 * muMax;
      return SphereArc(s, radius, samples, false, -muMax + m - s.theta, muMax - m - s.theta);
    }
    return SphereArc(s, radius, samples, false, -3.0 - s.theta, 3.0 - s.theta);
  }

  // flat case
  if (s.gamma > 0.0) {
    const double hi = -std::log(s.gamma * radius);  // psi0 < hi
    return SphereArc(s, radius, samples, false, hi - 6.0, hi - 0.12);
  }
  return SphereArc(s, radius, samples, false, -3.0, 3.0);
}

double jacobian_exp(const ProblemSpec& s, double rho, double tau) {
  if (s.curvSign != CurvSign::Neg)
    throw WrongCurvature("jacobian_exp is defined for negative curvature only");
  const double ct = std::cos(tau);
  return -s.lam * std::cos(rho) * std::sin(rho - tau) / (ct * ct);
}

}  // namespace aff
