#include "aff/causal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aff/errors.hpp"

namespace aff {

namespace {
constexpr double kStratumEps = 1e-9;

double band(double lam1, double lam2) {
  return kStratumEps * (1.0 + std::abs(lam1) + std::abs(lam2));
}
}  // namespace

const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::Outside: return "Outside";
    case Stratum::LightBoundary: return "LightBoundary";
    case Stratum::Interior: return "Interior";
    case Stratum::FrontierF: return "FrontierF";
    case Stratum::RegionE: return "RegionE";
  }
  return "?";
}

const char* branch_name(LightBranch b) {
  switch (b) {
    case LightBranch::None: return "None";
    case LightBranch::OnLambda1: return "Lambda1";
    case LightBranch::OnLambda2: return "Lambda2";
    case LightBranch::Both: return "Both";
  }
  return "?";
}

bool in_causal_future(const ProblemSpec& s, const GroupPoint& q0, const GroupPoint& q1) {
  const double a1 = lambda1(s, q1), a0 = lambda1(s, q0);
  const double b1 = lambda2(s, q1), b0 = lambda2(s, q0);
  const double tol = band(a1, b1);
  return a1 <= a0 + tol && b1 >= b0 - tol;
}

bool in_causal_past(const ProblemSpec& s, const GroupPoint& q0, const GroupPoint& q1) {
  const double a1 = lambda1(s, q1), a0 = lambda1(s, q0);
  const double b1 = lambda2(s, q1), b0 = lambda2(s, q0);
  const double tol = band(a1, b1);
  return a1 >= a0 - tol && b1 <= b0 + tol;
}

std::array<double, 2> point_B(const ProblemSpec& s) {
  const double denom = s.A.c + s.A.a;
  if (std::abs(denom) < 1e-12)
    throw AbsoluteIntersectionUndefined("lambda2 level line is parallel to the absolute");
  return {(s.A.d + s.A.b) / denom, 0.0};
}

double lambda3(const ProblemSpec& s, const GroupPoint& q) {
  const auto B = point_B(s);
  const double lam1B = (s.A.c - s.A.a) * B[0] + (s.A.d - s.A.b) * (0.0 - 1.0);
  return lambda1(s, q) - lam1B;
}

CausalClass classify(const ProblemSpec& s, const GroupPoint& q1) {
  const double a = lambda1(s, q1);
  const double b = lambda2(s, q1);
  const double tol = band(a, b);

  CausalClass out{Stratum::Outside, LightBranch::None, a, b,
                  std::numeric_limits<double>::quiet_NaN()};
  if (s.curvSign == CurvSign::Neg) out.lam3 = lambda3(s, q1);

  if (!(a <= tol && b >= -tol)) return out;

  if (std::min(std::abs(a), std::abs(b)) <= tol) {
    out.tag = Stratum::LightBoundary;
    if (std::max(std::abs(a), std::abs(b)) <= tol)
      out.branch = LightBranch::Both;
    else
      out.branch = std::abs(a) <= tol ? LightBranch::OnLambda1 : LightBranch::OnLambda2;
    return out;
  }

  if (s.curvSign != CurvSign::Neg) {
    out.tag = Stratum::Interior;
    return out;
  }
  if (std::abs(out.lam3) <= tol)
    out.tag = Stratum::FrontierF;
  else
    out.tag = out.lam3 < 0.0 ? Stratum::RegionE : Stratum::Interior;
  return out;
}

CausalClass classify_from(const ProblemSpec& s, const GroupPoint& q0, const GroupPoint& q1) {
  return classify(s, group_mul(group_inv(q0), q1));
}

bool is_globally_hyperbolic(const ProblemSpec& s) {
  return s.curvSign != CurvSign::Neg;
}

}  // namespace aff
