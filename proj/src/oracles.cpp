#include "aff/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "aff/causal.hpp"
#include "aff/errors.hpp"
#include "aff/geodesics.hpp"

namespace aff {

namespace {

struct HamState {
  double h1, h2, x, y;
};

HamState rhs(const ProblemSpec& s, const HamState& v) {
  // maximized controls v1 = -h1, v2 = h2 on the level h1^2 - h2^2 = 1
  const double br = -s.delta * v.h1 + s.gamma * v.h2;
  return {-v.h2 * br, -v.h1 * br, v.y * (-s.alpha * v.h1 + s.beta * v.h2),
          v.y * (-s.gamma * v.h1 + s.delta * v.h2)};
}

HamState axpy(const HamState& a, double c, const HamState& b) {
  return {a.h1 + c * b.h1, a.h2 + c * b.h2, a.x + c * b.x, a.y + c * b.y};
}

}  // namespace

IntegratedExtremal integrate_extremal(const ProblemSpec& s, double psi0, double t1, int steps) {
  if (steps < 1) throw std::invalid_argument("integrate_extremal needs steps >= 1");
  IntegratedExtremal out;
  const double h = t1 / steps;
  out.step = h;
  out.t.reserve(steps + 1);
  out.psi.reserve(steps + 1);
  out.x.reserve(steps + 1);
  out.y.reserve(steps + 1);
  out.h1.reserve(steps + 1);
  out.h2.reserve(steps + 1);
  out.hamiltonianDrift = 0.0;

  HamState v{-std::cosh(psi0), std::sinh(psi0), 0.0, 1.0};
  auto record = [&](double t, const HamState& w) {
    if (!(w.y > 0.0) || !std::isfinite(w.y) || std::abs(std::asinh(w.h2)) > 50.0)
      throw BlowUp("extremal left the integrable region near t = " + std::to_string(t));
    out.t.push_back(t);
    out.psi.push_back(std::asinh(w.h2));
    out.x.push_back(w.x);
    out.y.push_back(w.y);
    out.h1.push_back(w.h1);
    out.h2.push_back(w.h2);
    const double H = 0.5 * (w.h1 * w.h1 - w.h2 * w.h2);
    out.hamiltonianDrift = std::max(out.hamiltonianDrift, std::abs(H - 0.5));
  };
  record(0.0, v);
  for (int k = 0; k < steps; ++k) {
    const HamState k1 = rhs(s, v);
    const HamState k2 = rhs(s, axpy(v, 0.5 * h, k1));
    const HamState k3 = rhs(s, axpy(v, 0.5 * h, k2));
    const HamState k4 = rhs(s, axpy(v, h, k3));
    v = HamState{v.h1 + h / 6.0 * (k1.h1 + 2 * k2.h1 + 2 * k3.h1 + k4.h1),
                 v.h2 + h / 6.0 * (k1.h2 + 2 * k2.h2 + 2 * k3.h2 + k4.h2),
                 v.x + h / 6.0 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x),
                 v.y + h / 6.0 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y)};
    record((k + 1) * h, v);
  }
  return out;
}

namespace {

TangentVector control_of(const ProblemSpec& s, double phi) {
  const double c = std::cosh(phi), sh = std::sinh(phi);
  return {s.alpha * c + s.beta * sh, s.gamma * c + s.delta * sh};
}

// Signed residual of "p lies on the one-parameter subgroup ray of u".
double ray_residual(const TangentVector& u, const GroupPoint& p) {
  return u.u1 * (p.y - 1.0) - u.u2 * p.x;
}

}  // namespace

PathLowerBound brute_force_distance(const ProblemSpec& s, const GroupPoint& q1, int nSteps,
                                    int nControls, double phiRange, double maxLength) {
  const CausalClass cc = classify(s, q1);
  if (cc.tag != Stratum::Interior && cc.tag != Stratum::RegionE)
    throw NotInDomain(std::string("brute_force_distance expects an Interior or RegionE target, "
                                  "got stratum ") +
                      stratum_name(cc.tag));
  if (nSteps < 1 || nControls < 2) throw std::invalid_argument("search budget too small");
  if (maxLength <= 0.0) maxLength = 10.0 * phiRange;
  const double shootTol = 1e-6 * (1.0 + std::abs(q1.x) + q1.y);

  std::vector<double> grid(nControls);
  for (int i = 0; i < nControls; ++i)
    grid[i] = -phiRange + 2.0 * phiRange * i / (nControls - 1);

  const int ramp = std::max(0, nSteps - 1);
  const double sMax = ramp > 0 ? maxLength / ramp : 0.0;

  PathLowerBound best;
  best.nSteps = nSteps;
  best.nControls = nControls;
  best.phiRange = phiRange;
  best.value = -1.0;

  std::vector<double> phis(std::max(1, ramp));
  for (int ia = 0; ia < nControls; ++ia) {
    for (int ib = 0; ib < nControls; ++ib) {
      const double phiA = grid[ia], phiB = grid[ib];
      for (int k = 0; k < ramp; ++k)
        phis[k] = ramp > 1 ? phiA + (phiB - phiA) * k / (ramp - 1) : phiA;
      const TangentVector uLast = control_of(s, phiB);

      auto prefix = [&](double dur) {
        GroupPoint p = GroupPoint::identity();
        for (int k = 0; k < ramp; ++k)
          p = group_mul(p, lie_exp(control_of(s, phis[k]), dur));
        return p;
      };
      auto resid = [&](double dur) {
        return ray_residual(uLast, group_mul(group_inv(prefix(dur)), q1));
      };

      auto finish = [&](double dur) {
        const GroupPoint p = prefix(dur);
        const GroupPoint r = group_mul(group_inv(p), q1);
        double dLast;
        if (std::abs(uLast.u2) > 1e-9)
          dLast = std::log(r.y) / uLast.u2;
        else
          dLast = r.x / uLast.u1;
        if (!(dLast >= -1e-12)) return;
        dLast = std::max(dLast, 0.0);
        const GroupPoint full = group_mul(p, lie_exp(uLast, dLast));
        const double miss = std::hypot(full.x - q1.x, full.y - q1.y);
        if (miss > shootTol) return;
        const double length = ramp * dur + dLast;
        if (length > best.value) {
          best.value = length;
          best.missDistance = miss;
          best.controls.assign(phis.begin(), phis.begin() + ramp);
          best.controls.push_back(phiB);
          best.durations.assign(ramp, dur);
          best.durations.push_back(dLast);
        }
      };

      if (ramp == 0) {
        // single piece: q1 must sit on the ray itself
        if (std::abs(resid(0.0)) <= 1e-12 * (1.0 + std::abs(q1.x) + q1.y)) finish(0.0);
        continue;
      }

      // scan for sign changes of the ray residual, then bisect
      const int scan = 160;
      double prevS = 0.0, prevR = resid(0.0);
      if (std::abs(prevR) <= 1e-14) finish(0.0);
      for (int k = 1; k <= scan; ++k) {
        const double curS = sMax * k / scan;
        double curR;
        try {
          curR = resid(curS);
        } catch (const std::exception&) {
          break;  // overflow in exp for extreme controls; stop this ladder
        }
        if (std::isfinite(curR) && std::isfinite(prevR) && prevR * curR < 0.0) {
          double lo = prevS, hi = curS, flo = prevR;
          for (int it = 0; it < 70; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = resid(mid);
            if (fm == 0.0) {
              lo = hi = mid;
              break;
            }
            if (flo * fm < 0.0)
              hi = mid;
            else {
              lo = mid;
              flo = fm;
            }
          }
          finish(0.5 * (lo + hi));
        }
        prevS = curS;
        prevR = curR;
      }
    }
  }

  if (best.value < 0.0)
    throw TargetUnreachable("no control ladder within the search budget reaches the target");
  return best;
}

double finite_diff_jacobian(const ProblemSpec& s, double rho, double tau, double step) {
  const double h = step;
  const GroupPoint tp = chart_point(s, rho, tau + h);
  const GroupPoint tm = chart_point(s, rho, tau - h);
  const GroupPoint rp = chart_point(s, rho + h, tau);
  const GroupPoint rm = chart_point(s, rho - h, tau);
  const double xt = (tp.x - tm.x) / (2 * h), yt = (tp.y - tm.y) / (2 * h);
  const double xr = (rp.x - rm.x) / (2 * h), yr = (rp.y - rm.y) / (2 * h);
  return xt * yr - xr * yt;
}

}  // namespace aff
