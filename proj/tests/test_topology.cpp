#include <doctest.h>

#include "ymvac/topology.hpp"

using namespace ymvac;

namespace {

QuadratureSpec default_quad() {
  QuadratureSpec q;
  q.n_r = 64;
  return q;
}

}  // namespace

TEST_CASE("Gribov factor: identity at the origin, -1^n far away, SU(2) everywhere") {
  const RadialProfile prof = bps_phase_profile(1.0);
  CHECK(gribov_factor(2, SpatialPoint(0, 0, 0), prof).distance_to_identity() == 0);
  const GroupElement far = gribov_factor(1, SpatialPoint(0, 0, 1e8), prof);
  CHECK((far.matrix() + Mat2::Identity()).norm() < 1e-7);
  const GroupElement v = gribov_factor(3, SpatialPoint(0.3, 0.4, -0.2), prof);
  CHECK(GroupElement::unitarity_defect(v.matrix()) < 1e-15);
}

TEST_CASE("analytic gradient matches finite differences") {
  const RadialProfile prof = bps_phase_profile(1.0);
  const SpatialPoint x(0.7, -0.3, 1.1);
  const MatrixTriple a = pure_gauge(2, x, prof, DerivativeMethod::Analytic);
  const MatrixTriple f = pure_gauge(2, x, prof, DerivativeMethod::FiniteDifference, {1e-3, 4});
  for (int i = 0; i < 3; ++i) CHECK((a[i] - f[i]).norm() < 1e-10);
}

TEST_CASE("pure gauge is anti-Hermitian traceless") {
  const MatrixTriple L = pure_gauge(1, SpatialPoint(0.2, 0.5, 0.1), bps_phase_profile(1.0));
  for (const auto& m : L) {
    CHECK((m + m.adjoint()).norm() < 1e-14);
    CHECK(std::abs(m.trace()) < 1e-14);
  }
}

TEST_CASE("degree of the Gribov map is n and matches the radial oracle") {
  const RadialProfile prof = bps_phase_profile(1.0);
  const QuadratureSpec q = default_quad();
  for (int n = -2; n <= 2; ++n) {
    const DegreeResult d = map_degree(n, q, prof);
    CHECK(d.value == doctest::Approx(n).epsilon(1e-10).scale(1));
    CHECK(d.value == doctest::Approx(degree_radial_oracle(n, prof, q.r_max)).epsilon(1e-10).scale(1));
  }
}

TEST_CASE("radial oracle on a finite ball: (1/pi)[beta - sin beta cos beta]") {
  const RadialProfile prof = bps_phase_profile(1.0);
  const double beta = kPi * prof.value(3.0);
  const double oracle = (beta - std::sin(beta) * std::cos(beta)) / kPi;
  CHECK(degree_radial_oracle(1, prof, 3.0) == doctest::Approx(oracle).epsilon(1e-14));
}

TEST_CASE("profile boundary conditions are enforced") {
  RadialProfile bad{[](double r) { return 1 + r; }, [](double) { return 1.0; }, 1.0, "bad"};
  CHECK_THROWS_AS(bad.check_boundary_conditions(), ContractError);
  CHECK_NOTHROW(bps_phase_profile(0.5).check_boundary_conditions());
}

TEST_CASE("matrix potential round trip") {
  const Tensor3 A{{{0.1, -0.2, 0.3}, {0.4, 0.0, -0.5}, {0.6, 0.7, -0.8}}};
  const Tensor3 back = from_matrix_potential(to_matrix_potential(A, 1.3), 1.3);
  CHECK(frobenius(back - A) < 1e-15);
}

TEST_CASE("winding functional: zero field, BPS, pure gauges") {
  const double eps = 1.0, g = 1.0;
  const QuadratureSpec q = default_quad();
  const StencilConfig st = StencilConfig::for_scale(eps);
  const RadialProfile prof = bps_phase_profile(eps);
  CHECK(winding_functional(ColorAlgebraField::zero(), q, g, eps, st).value == 0);

  const FieldPair bps = build_fields(MonopoleScale(g, eps), FieldVariant::BPS);
  const WindingReport x0 = winding_functional(bps.gauge, q, g, eps, st);
  CHECK(std::abs(x0.value) < 1e-10);

  const auto L2 = gauge_transform(ColorAlgebraField::zero(), 2, prof, g);
  CHECK(winding_functional(L2, q, g, eps, st).value == doctest::Approx(2).epsilon(1e-6));

  const auto moved = gauge_transform(bps.gauge, 1, prof, g);
  const double shift = winding_functional(moved, q, g, eps, st).value - x0.value;
  CHECK(shift == doctest::Approx(1 + winding_surface_term(bps.gauge, 1, prof, q, g)).epsilon(1e-6));
}

TEST_CASE("surface term on a finite ball accounts for the shift") {
  const double eps = 1.0, g = 1.0;
  QuadratureSpec q = default_quad();
  q.r_max = 50;
  const RadialProfile prof = bps_phase_profile(eps);
  const FieldPair bps = build_fields(MonopoleScale(g, eps), FieldVariant::BPS);
  const StencilConfig st = StencilConfig::for_scale(eps);
  const double x0 = winding_functional(bps.gauge, q, g, eps, st).value;
  const double x1 = winding_functional(gauge_transform(bps.gauge, 1, prof, g), q, g, eps, st).value;
  const double deg = map_degree(1, q, prof).value;
  const double surface = winding_surface_term(bps.gauge, 1, prof, q, g);
  CHECK(surface != 0);
  CHECK(x1 - x0 == doctest::Approx(deg + surface).epsilon(1e-5));
}

TEST_CASE("finite-difference gauge transform agrees with the analytic one") {
  const RadialProfile prof = bps_phase_profile(1.0);
  const FieldPair bps = build_fields(MonopoleScale(1.0, 1.0), FieldVariant::BPS);
  const auto a = gauge_transform(bps.gauge, 1, prof, 1.0);
  const auto f = gauge_transform(
      bps.gauge, [&](const SpatialPoint& p) { return gribov_factor(1, p, prof); }, 1.0, {1e-3, 4});
  const SpatialPoint x(0.4, 0.9, -0.6);
  CHECK(frobenius(a(x) - f(x)) < 1e-9);
}

TEST_CASE("instanton amplitude") {
  CHECK(instanton_amplitude(1, 0, 2.0) == doctest::Approx(std::exp(-2 * kPi * kPi)));
  CHECK(instanton_amplitude(3, 3, 2.0) == 1.0);
}

TEST_CASE("coarse degree quadrature reports a resolution failure") {
  QuadratureSpec q;
  q.n_r = 16;
  q.n_theta = 16;
  q.n_phi = 16;
  const RadialProfile sharp{[](double r) { return std::tanh(r * r * 1e3); },
                            [](double r) { return 2e3 * r / std::pow(std::cosh(r * r * 1e3), 2); },
                            1.0, "sharp"};
  CHECK_THROWS_AS(map_degree(3, q, sharp), ResolutionError);
}
