#pragma once

#include <optional>

#include "aff/causal.hpp"
#include "aff/geodesics.hpp"
#include "aff/problem.hpp"

namespace aff {

// Initial covector coordinate and arrival time of the unique optimal
// arclength-parametrized trajectory from Id to an interior target.
struct InverseResult {
  double psi0;
  double t1;
};

// exp_map(s, psi0, t1) == q1 is the defining round-trip contract.
InverseResult exp_inverse(const ProblemSpec& s, const GroupPoint& q1);

// Lorentzian distance between q0 and q1 with the stratum that produced it.
// value is +infinity on RegionE targets; maximizerExists is false exactly
// on FrontierF, RegionE and Outside.
struct DistanceResult {
  double value;
  Stratum stratum;
  LightBranch branch;
  bool maximizerExists;
  std::optional<InverseResult> geodesic;  // Interior targets only
};

DistanceResult distance(const ProblemSpec& s, const GroupPoint& q0, const GroupPoint& q1);

// Sphere S(R) centred at Id sampled over the interior stratum; for negative
// curvature R == pi/Delta degenerates to the frontier ray. Samplers are
// pure and safe to evaluate concurrently at distinct indices.
class SphereArc {
 public:
  SphereArc(const ProblemSpec& s, double radius, int samples, bool frontierRay,
            double paramLo, double paramHi);

  double radius() const { return radius_; }
  int sample_count() const { return samples_; }
  bool frontier_ray() const { return frontierRay_; }
  double sigma() const { return sigma_; }

  GroupPoint point(int k) const;

  // Residual of the defining hyperbola equation (0 on the sphere); for the
  // frontier ray this is lambda3.
  double hyperbola_residual(const GroupPoint& q) const;

 private:
  ProblemSpec spec_;
  double radius_;
  int samples_;
  bool frontierRay_;
  double sigma_;
  double lo_, hi_;  // sampling interval in the per-case chart parameter
};

SphereArc sphere(const ProblemSpec& s, double radius, int samples);

// Closed-form Jacobian of the negative-curvature chart map (rho, tau) ->
// (x, y), in the order d(x,y)/d(tau,rho). Nonvanishing on the open chart.
double jacobian_exp(const ProblemSpec& s, double rho, double tau);

}  // namespace aff
