#include <cmath>
#include <numbers>
#include <random>

#include "aff/errors.hpp"
#include "aff/oracles.hpp"
#include "aff/synthesis.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("integrator reproduces golden endpoints") {
  const IntegratedExtremal a = integrate_extremal(preset("P1"), 0.0, kPi / 4, 10000);
  CHECK(std::abs(a.endpoint().x - 1.0) <= 1e-9);
  CHECK(std::abs(a.endpoint().y - std::sqrt(2.0)) <= 1e-9);

  const IntegratedExtremal b = integrate_extremal(preset("P2"), 0.0, 1.0, 10000);
  CHECK(std::abs(b.endpoint().x) <= 1e-9);
  CHECK(std::abs(b.endpoint().y - std::exp(1.0)) <= 1e-9);

  const IntegratedExtremal c = integrate_extremal(preset("P3"), 0.3, 0.0, 1);
  CHECK(c.endpoint().x == 0.0);
  CHECK(c.endpoint().y == 1.0);
}

TEST_CASE("integrator conserves the energy level") {
  std::mt19937_64 rng(157);
  for (auto sign : {CurvSign::Neg, CurvSign::Zero, CurvSign::Pos}) {
    for (int i = 0; i < 10; ++i) {
      const ProblemSpec s = testsupport::random_spec(rng, sign);
      const double psi0 = testsupport::random_psi0(rng, s);
      const IntegratedExtremal e =
          integrate_extremal(s, psi0, testsupport::horizon(s, psi0), 10000);
      CHECK(e.hamiltonianDrift <= 1e-9);
      for (double y : e.y) CHECK(y > 0.0);
    }
  }
}

TEST_CASE("integrator converges at fourth order") {
  const ProblemSpec s = preset("P1");
  const double t1 = 1.4;  // inside the domain for psi0 = 0
  const GroupPoint exact = exp_map(s, 0.0, t1);
  double prev = 0.0;
  for (int k = 0; k < 4; ++k) {
    const int steps = 1000 << k;
    const GroupPoint e = integrate_extremal(s, 0.0, t1, steps).endpoint();
    const double err = std::hypot(e.x - exact.x, e.y - exact.y);
    if (k > 0 && prev > 1e-10) {
      const double gain = prev / err;
      CHECK(gain > 10.0);  // nominal 16 per halving until roundoff
      CHECK(gain < 26.0);
    }
    prev = err;
  }
}

TEST_CASE("integrator reports blow-up past the maximal domain") {
  const ProblemSpec s = preset("P1");
  const double tMax = domain_bounds(s, 0.0).second;
  CHECK_THROWS_AS(integrate_extremal(s, 0.0, 1.1 * tMax, 20000), BlowUp);
}

TEST_CASE("path maximizer brackets the closed-form distance") {
  const ProblemSpec p1 = preset("P1");
  const GroupPoint t1{1.0, std::sqrt(2.0)};
  const PathLowerBound b1 = brute_force_distance(p1, t1, 8, 64);
  const double d1 = distance(p1, GroupPoint::identity(), t1).value;
  CHECK(b1.value >= d1 - 0.02);
  CHECK(b1.value <= d1 + 1e-6);
  CHECK(b1.missDistance <= 1e-6 * (1 + t1.y + std::abs(t1.x)));

  const ProblemSpec p3 = preset("P3");
  const GroupPoint t3{1.0, 2.0};
  const PathLowerBound b3 = brute_force_distance(p3, t3, 8, 64);
  const double d3 = distance(p3, GroupPoint::identity(), t3).value;
  CHECK(b3.value >= d3 - 0.02);
  CHECK(b3.value <= d3 + 1e-6);
}

TEST_CASE("path maximizer soundness on random targets") {
  std::mt19937_64 rng(163);
  for (auto name : {"P1", "P2", "P3"}) {
    const ProblemSpec s = preset(name);
    for (int i = 0; i < 3; ++i) {
      const GroupPoint q = testsupport::random_interior(rng, s, 1.5);
      const double d = distance(s, GroupPoint::identity(), q).value;
      const PathLowerBound b = brute_force_distance(s, q, 10, 48);
      CHECK(b.value <= d + 1e-6);
      CHECK(b.value >= d - 0.02);
    }
  }
}

TEST_CASE("path maximizer witnesses infinite distance") {
  const ProblemSpec s = preset("P1");
  const GroupPoint target{4.0, 2.0};  // RegionE
  double prev = -1.0;
  double phi = 1.5;
  int steps = 6, controls = 32;
  for (int k = 0; k < 3; ++k) {
    const PathLowerBound b = brute_force_distance(s, target, steps, controls, phi);
    CHECK(b.value > prev);
    prev = b.value;
    phi *= 2.0;
    steps *= 2;
    controls *= 2;
  }
  CHECK(prev > kPi);  // already beyond every finite interior distance
}

TEST_CASE("path maximizer rejects unusable targets") {
  const ProblemSpec s = preset("P1");
  CHECK_THROWS_AS(brute_force_distance(s, {-1.0, 2.0}, 8, 32), NotInDomain);
  CHECK_THROWS_AS(brute_force_distance(s, {3.0, 2.0}, 8, 32), NotInDomain);
  // a single piece only reaches targets sitting exactly on a grid ray
  CHECK_THROWS_AS(brute_force_distance(s, {1.0, std::sqrt(2.0)}, 1, 8), TargetUnreachable);
}

TEST_CASE("finite-difference jacobian on the chart") {
  const ProblemSpec s = preset("P1");
  CHECK(std::abs(std::abs(finite_diff_jacobian(s, 0.0, kPi / 4)) - std::sqrt(2.0)) <= 1e-6);
  // degenerates towards the diagonal of the chart
  CHECK(std::abs(finite_diff_jacobian(s, 0.4, 0.4 + 1e-4)) <= 2e-4);
}
