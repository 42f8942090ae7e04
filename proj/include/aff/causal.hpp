#pragma once

#include <array>

#include "aff/problem.hpp"

namespace aff {

enum class Stratum { Outside, LightBoundary, Interior, FrontierF, RegionE };
enum class LightBranch { None, OnLambda1, OnLambda2, Both };

// Stratum of a target point relative to Id. FrontierF/RegionE occur only
// for negative curvature. lam3 is NaN when curvature is nonnegative.
struct CausalClass {
  Stratum tag;
  LightBranch branch;
  double lam1;
  double lam2;
  double lam3;
};

const char* stratum_name(Stratum s);
const char* branch_name(LightBranch b);

// Causal future/past membership in terms of the affine inequalities.
bool in_causal_future(const ProblemSpec& s, const GroupPoint& q0, const GroupPoint& q1);
bool in_causal_past(const ProblemSpec& s, const GroupPoint& q0, const GroupPoint& q1);

// Intersection of {lambda2 = 0} with the absolute {y = 0}; lies outside
// the group. Defined whenever c + a != 0 (always for negative curvature).
std::array<double, 2> point_B(const ProblemSpec& s);
double lambda3(const ProblemSpec& s, const GroupPoint& q);

// Single source of truth for strata; the distance code never re-derives
// them. General base points reduce via classify_from.
CausalClass classify(const ProblemSpec& s, const GroupPoint& q1);
CausalClass classify_from(const ProblemSpec& s, const GroupPoint& q0, const GroupPoint& q1);

bool is_globally_hyperbolic(const ProblemSpec& s);

}  // namespace aff
