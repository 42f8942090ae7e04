#include <cmath>
#include <random>

#include "aff/errors.hpp"
#include "aff/isometry.hpp"
#include "aff/synthesis.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aff;

namespace {

const GroupPoint kId = GroupPoint::identity();

FieldValue eval_combo(const std::array<KillingField, 3>& basis, const GroupPoint& q, double c1,
                      double c2, double cx) {
  const FieldValue v1 = basis[0].field.value(q);
  const FieldValue v2 = basis[1].field.value(q);
  const FieldValue vx = basis[2].field.value(q);
  return {c1 * v1.dx + c2 * v2.dx + cx * vx.dx, c1 * v1.dy + c2 * v2.dy + cx * vx.dy};
}

void check_close(const FieldValue& a, const FieldValue& b, double tol) {
  CHECK(std::abs(a.dx - b.dx) <= tol * (1 + std::abs(a.dx) + std::abs(b.dx)));
  CHECK(std::abs(a.dy - b.dy) <= tol * (1 + std::abs(a.dy) + std::abs(b.dy)));
}

// RK4 step of the flow of a closed-form field
GroupPoint flow_step(const VectorField& X, const GroupPoint& q, double h) {
  auto f = [&](double x, double y) { return X.value({x, y}); };
  const FieldValue k1 = f(q.x, q.y);
  const FieldValue k2 = f(q.x + 0.5 * h * k1.dx, q.y + 0.5 * h * k1.dy);
  const FieldValue k3 = f(q.x + 0.5 * h * k2.dx, q.y + 0.5 * h * k2.dy);
  const FieldValue k4 = f(q.x + h * k3.dx, q.y + h * k3.dy);
  return {q.x + h / 6 * (k1.dx + 2 * k2.dx + 2 * k3.dx + k4.dx),
          q.y + h / 6 * (k1.dy + 2 * k2.dy + 2 * k3.dy + k4.dy)};
}

}  // namespace

TEST_CASE("Killing basis values") {
  const auto b1 = killing_basis(preset("P1"));
  CHECK(b1[0].tag == KillingTag::RightX1);
  CHECK(b1[0].complete);
  CHECK(b1[2].tag == KillingTag::Extra);
  CHECK_FALSE(b1[2].complete);

  const FieldValue r1 = b1[0].field.value({2.5, 0.7});
  CHECK(r1.dx == 1.0);
  CHECK(r1.dy == 0.0);
  const FieldValue r2 = b1[1].field.value({2.5, 0.7});
  CHECK(r2.dx == 2.5);
  CHECK(r2.dy == 0.7);

  // P1 extra field is (y^2 + x^2 - 1, 2xy)
  const FieldValue e1 = b1[2].field.value({2.0, 3.0});
  CHECK(e1.dx == doctest::Approx(12.0).epsilon(1e-14));
  CHECK(e1.dy == doctest::Approx(12.0).epsilon(1e-14));

  // P3 extra field is (x, y - y^2)
  const auto b3 = killing_basis(preset("P3"));
  const FieldValue e3 = b3[2].field.value({2.0, 3.0});
  CHECK(e3.dx == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(e3.dy == doctest::Approx(-6.0).epsilon(1e-14));

  // the extra field vanishes at Id for every preset
  for (auto name : {"P1", "P2", "P3"}) {
    const FieldValue v = killing_basis(preset(name))[2].field.value(kId);
    CHECK(std::abs(v.dx) <= 1e-14);
    CHECK(std::abs(v.dy) <= 1e-14);
  }
}

TEST_CASE("bracket golden cases") {
  std::mt19937_64 rng(127);
  for (auto name : {"P1", "P2", "P3"}) {
    const auto basis = killing_basis(preset(name));
    for (int i = 0; i < 20; ++i) {
      const GroupPoint q = testsupport::random_point(rng);
      const FieldValue br = lie_bracket(basis[0].field, basis[1].field, q);
      CHECK(br.dx == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(std::abs(br.dy) <= 1e-13);
    }
  }
  // P1: [X~1, X-] = 2 X~2
  const auto b1 = killing_basis(preset("P1"));
  const GroupPoint q{1.7, 0.6};
  const FieldValue br = lie_bracket(b1[0].field, b1[2].field, q);
  CHECK(br.dx == doctest::Approx(2 * q.x).epsilon(1e-13));
  CHECK(br.dy == doctest::Approx(2 * q.y).epsilon(1e-13));
  // P3: [X~1, X0] = X~1
  const auto b3 = killing_basis(preset("P3"));
  const FieldValue br3 = lie_bracket(b3[0].field, b3[2].field, q);
  CHECK(br3.dx == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(br3.dy) <= 1e-13);
}

TEST_CASE("bracket tables hold pointwise") {
  std::mt19937_64 rng(131);
  for (auto sign : {CurvSign::Neg, CurvSign::Pos}) {
    for (int i = 0; i < 25; ++i) {
      const ProblemSpec s = testsupport::random_spec(rng, sign);
      const auto basis = killing_basis(s);
      const double pm = sign == CurvSign::Pos ? 1.0 : -1.0;
      for (int j = 0; j < 8; ++j) {
        const GroupPoint q = testsupport::random_point(rng);
        // [X~1, X_pm] = -pm*(2 nu/lam) X~1 + (2/lam) X~2
        check_close(lie_bracket(basis[0].field, basis[2].field, q),
                    eval_combo(basis, q, -pm * 2 * s.nu / s.lam, 2 / s.lam, 0.0), 1e-10);
        // [X~2, X_pm] = 2(lam^2-nu^2)/lam X~1 + pm*(2 nu/lam) X~2 + X_pm
        check_close(lie_bracket(basis[1].field, basis[2].field, q),
                    eval_combo(basis, q, 2 * (s.lam * s.lam - s.nu * s.nu) / s.lam,
                               pm * 2 * s.nu / s.lam, 1.0),
                    1e-10);
      }
    }
  }
  for (int i = 0; i < 25; ++i) {
    const ProblemSpec s = testsupport::random_spec(rng, CurvSign::Zero);
    const auto basis = killing_basis(s);
    for (int j = 0; j < 8; ++j) {
      const GroupPoint q = testsupport::random_point(rng);
      // [X~1, X0] = X~1 and [X~2, X0] = 2g X~1 - X~2 + X0
      check_close(lie_bracket(basis[0].field, basis[2].field, q),
                  eval_combo(basis, q, 1.0, 0.0, 0.0), 1e-10);
      check_close(lie_bracket(basis[1].field, basis[2].field, q),
                  eval_combo(basis, q, 2 * s.g, -1.0, 1.0), 1e-10);
    }
  }
}

TEST_CASE("Killing identity residuals") {
  std::mt19937_64 rng(137);
  for (auto name : {"P1", "P2", "P3"}) {
    const ProblemSpec s = preset(name);
    const auto basis = killing_basis(s);
    for (int i = 0; i < 100; ++i) {
      const GroupPoint q = testsupport::random_point(rng, 2.0, 0.3, 3.0);
      for (const auto& f : basis) CHECK(killing_residual(s, f.field, q) <= 1e-6);
    }
  }
  // negative control: y^2 d/dx is not Killing
  const ProblemSpec p1 = preset("P1");
  const VectorField probe = probe_field();
  double worst = 0.0;
  std::mt19937_64 rng2(139);
  for (int i = 0; i < 50; ++i)
    worst = std::max(worst,
                     killing_residual(p1, probe, testsupport::random_point(rng2, 2.0, 0.3, 3.0)));
  CHECK(worst > 1e-2);
}

TEST_CASE("complete flows preserve the distance") {
  std::mt19937_64 rng(149);
  const double h = 1e-3;
  for (auto name : {"P1", "P2", "P3"}) {
    const ProblemSpec s = preset(name);
    const auto basis = killing_basis(s);
    for (int i = 0; i < 40; ++i) {
      const GroupPoint q1 = testsupport::random_point(rng);
      const GroupPoint q2 = group_mul(q1, testsupport::random_interior(rng, s, 1.5));
      const double d = distance(s, q1, q2).value;
      for (int f = 0; f < 2; ++f) {  // complete fields only
        const GroupPoint f1 = flow_step(basis[f].field, q1, h);
        const GroupPoint f2 = flow_step(basis[f].field, q2, h);
        CHECK(std::abs(distance(s, f1, f2).value - d) <= 1e-6 * (1 + d));
      }
    }
  }
}

TEST_CASE("flat embedding golden values") {
  const ProblemSpec s = preset("P3");
  const MinkowskiPoint id = embed_flat(s, kId);
  CHECK(id.xt == 0.0);
  CHECK(id.yt == 0.0);

  // fixed by the distance identity together with half-plane membership
  const MinkowskiPoint p = embed_flat(s, {1.0, 2.0});
  CHECK(p.xt == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(p.yt == doctest::Approx(-0.25).epsilon(1e-14));

  const double dt = minkowski_distance(id, p);
  CHECK(dt * dt == doctest::Approx(0.5).epsilon(1e-13));

  CHECK_THROWS_AS(embed_flat(preset("P1"), kId), WrongCurvature);
}

TEST_CASE("minkowski distance basics") {
  CHECK(minkowski_distance({1, 2}, {1, 2}) == 0.0);
  CHECK(minkowski_distance({0, 0}, {1, 0}) == 1.0);
  CHECK(minkowski_distance({0, 0}, {1, 1}) == 0.0);   // lightlike
  CHECK(minkowski_distance({0, 0}, {-1, 0}) == 0.0);  // past directed
}

TEST_CASE("embedding is an isometry onto the half-plane") {
  std::mt19937_64 rng(151);
  // the embedding contract holds for every flat spec, not only P3
  for (int rep = 0; rep < 6; ++rep) {
    const ProblemSpec s =
        rep == 0 ? preset("P3") : testsupport::random_spec(rng, CurvSign::Zero);
    for (int i = 0; i < 200; ++i) {
      const GroupPoint q1 = testsupport::random_point(rng);
      const GroupPoint q2 = group_mul(q1, testsupport::random_interior(rng, s, 2.0));
      const double d = distance(s, q1, q2).value;
      const double dt = minkowski_distance(embed_flat(s, q1), embed_flat(s, q2));
      CHECK(std::abs(d - dt) <= 1e-9 * (1 + d));
    }
    for (int i = 0; i < 200; ++i) {
      const GroupPoint q1 = testsupport::random_point(rng);
      const GroupPoint q2 = testsupport::random_point(rng);
      const double d = distance(s, q1, q2).value;
      const double dt = minkowski_distance(embed_flat(s, q1), embed_flat(s, q2));
      CHECK((d != 0.0) == (dt != 0.0));
      const double margin = half_plane_margin(s, embed_flat(s, q1));
      CHECK(margin > 0.0);
      CHECK(margin == doctest::Approx(1.0 / q1.y).epsilon(1e-10));
    }
  }
}
