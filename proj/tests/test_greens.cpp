#include <doctest.h>

#include "ymvac/greens.hpp"
#include "ymvac/sampling.hpp"

using namespace ymvac;

TEST_CASE("golden-section exponents") {
  const auto [l1, l2] = golden_roots(1);
  CHECK(std::abs(l1 - (-1 - std::sqrt(5.0)) / 2) < 1e-15);
  CHECK(std::abs(l2 - (std::sqrt(5.0) - 1) / 2) < 1e-15);
  CHECK(l1 == doctest::Approx(-1.618).epsilon(1e-3));
  CHECK(l2 == doctest::Approx(0.618).epsilon(1e-3));
  const auto [c1, c2] = golden_roots(0);
  CHECK(c1 == -1);
  CHECK(c2 == 0);
  for (int n = 0; n < 6; ++n) {
    const auto [a, b] = golden_roots(n);
    CHECK(a * a + a == doctest::Approx(n).scale(1));
    CHECK(b * b + b == doctest::Approx(n).scale(1));
  }
  CHECK_THROWS_AS(golden_roots(-1), DomainError);
}

TEST_CASE("closed-form radial solutions solve the Euler equation") {
  const EulerSolution c = EulerSolution::coulomb(), g = EulerSolution::golden(0.3);
  CHECK(c.value(2.0) == doctest::Approx(-1 / (8 * kPi)));
  CHECK(g.d == doctest::Approx(1 / (4 * kPi)));
  Sampler s(11);
  for (int i = 0; i < 100; ++i) {
    const double z = std::exp(s.uniform(-5, 5));
    CHECK(euler_residual(c, z) < 1e-12);
    CHECK(euler_residual(g, z) < 1e-12);
  }
  CHECK_THROWS_AS(euler_residual(c, 0), DomainError);
  CHECK_NOTHROW(g.check_invariants());
  EulerSolution broken = g;
  broken.l1 = 0.5;
  CHECK_THROWS_AS(broken.check_invariants(), ContractError);
}

TEST_CASE("radial YM equation: fixed points vanish exactly, others do not") {
  for (double c : {0.0, 1.0, -1.0}) {
    auto f = [c](double) { return c; };
    CHECK(radial_ym_residual(f, [](double) { return 0.0; }, 2.0) == 0);
    CHECK(std::abs(radial_ym_residual(f, 2.0)) < 1e-12);
  }
  auto half = [](double) { return 0.5; };
  CHECK(radial_ym_residual(half, [](double) { return 0.0; }, 2.0) == doctest::Approx(0.5 * (0.25 - 1) / 4));
}

TEST_CASE("shooting: fixed points stay, classification is stable, blow-up is reported") {
  for (auto [f0, fp] : {std::pair{0.0, FixedPoint::Zero}, {1.0, FixedPoint::PlusOne}, {-1.0, FixedPoint::MinusOne}}) {
    const RadialTrajectory t = shoot_radial(f0, 0, {1, 100});
    CHECK(t.classification == fp);
    CHECK(t.f.back() == f0);
  }
  const RadialTrajectory a = shoot_radial(0.999, 0, {1, 100});
  const RadialTrajectory b = shoot_radial(0.999, 0, {1, 100}, {1e-12, 1e-14});
  CHECK(a.classification == b.classification);
  CHECK(a.f.back() == doctest::Approx(b.f.back()).epsilon(1e-6));

  const RadialTrajectory blow = shoot_radial(2e6, 0, {1, 100});
  CHECK(blow.classification == FixedPoint::Diverged);
  CHECK(blow.blowup_radius >= 1);
  CHECK_THROWS(shoot_radial(0.5, 0, {2, 1}));
}

TEST_CASE("Green tensor: centred source is annihilated by the monopole operator") {
  const GreenTensor G = green_tensor(EulerSolution::coulomb(), EulerSolution::golden());
  Sampler s(5);
  for (double z : {0.3, 1.0, 7.0}) {
    const Vec3 d = s.direction();
    CHECK(green_operator_residual(G, SpatialPoint(z * d), d, z / 500) < 1e-6);
  }
  // The off-centre source is not a solution; the residual is O(1).
  const Vec3 d{0, 0, 1};
  CHECK(green_operator_residual_offcentre(G, SpatialPoint(2 * d), SpatialPoint(1 * d), 2.0 / 500) > 1e-2);
}

TEST_CASE("Green tensor contracts") {
  CHECK_THROWS_AS(green_tensor(EulerSolution::golden(), EulerSolution::coulomb()), ContractError);
  const GreenTensor G = green_tensor(EulerSolution::coulomb(), EulerSolution::golden());
  CHECK_THROWS_AS(G.evaluate(SpatialPoint(0, 0, 0), SpatialPoint(1, 0, 0)), DomainError);
  CHECK_THROWS_AS(G.evaluate(SpatialPoint(1, 0, 0), SpatialPoint(1, 0, 0)), DomainError);
  auto f = [&](const SpatialPoint& p) { return G.evaluate_centered(p, {0, 0, 1}); };
  CHECK_THROWS_AS(monopole_operator(f, SpatialPoint(0, 0, 0.01), 0.01), StencilError);
  // Longitudinal part: n n^T V0 for aligned directions.
  const ColorMatrix M = G.evaluate_centered(SpatialPoint(0, 0, 2), {0, 0, 1});
  CHECK(M(2, 2) == doctest::Approx(-1 / (8 * kPi)));
  CHECK(M(0, 0) == doctest::Approx(G.sol1().value(2)));
}
