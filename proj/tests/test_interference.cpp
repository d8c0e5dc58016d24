#include <doctest.h>

#include "ymvac/bps_profiles.hpp"
#include "ymvac/interference.hpp"

using namespace ymvac;

TEST_CASE("adjoint of u is a rotation") {
  const EulerAngles a{0.3, 1.1, -0.7};
  const Eigen::Matrix3d R = a.adjoint();
  CHECK((R * R.transpose() - Eigen::Matrix3d::Identity()).norm() < 1e-14);
  CHECK(R.determinant() == doctest::Approx(1));
  CHECK(EulerAngles{kPi, 2 * kPi, kPi}.satisfies_constraint());
  CHECK(EulerAngles{kPi, 2 * kPi, kPi}.constraint_winding() == 1);
  CHECK_FALSE(a.satisfies_constraint());
}

TEST_CASE("dressed factor is u exp(2 pi i n f01 tau.n) u^-1") {
  const EulerAngles a{0.3, 1.1, -0.7};
  const SpatialPoint x(0.8, -0.4, 1.5);
  const double beta = 2 * kPi * 2 * f01_bps(x.r(), 1.0);
  const Vec3 n = x.n_hat();
  const Mat2 inner = std::cos(beta) * Mat2::Identity() + cplx(0, 1) * std::sin(beta) * pauli_dot(n);
  const Mat2 U = a.u().matrix();
  const Mat2 expect = U * inner * U.adjoint();
  CHECK((dressed_factor(2, a, x, 1.0).matrix() - expect).norm() < 1e-14);
  CHECK(dressed_factor(3, a, SpatialPoint(0, 0, 0), 1.0).distance_to_identity() == 0);
  CHECK(dressed_factor(0, a, x, 1.0).distance_to_identity() == 0);
}

TEST_CASE("dressed factor approaches the identity far away as 2 pi |n| eps/r") {
  const EulerAngles a{0.3, 1.1, -0.7};
  for (int n : {1, -2}) {
    const double dev = dressed_factor(n, a, SpatialPoint(0, 100, 0), 1.0).distance_to_identity();
    CHECK(dev < 1.2 * 0.01 * 2 * kPi * std::abs(n));
    CHECK(dev > 0.8 * 0.01 * 2 * kPi * std::abs(n));
  }
}

TEST_CASE("symmetric window") {
  CHECK(symmetric_window(8) == std::pair{-4, 4});
  CHECK(symmetric_window(7) == std::pair{-3, 3});
  CHECK_THROWS_AS(symmetric_window(-1), DomainError);
}

TEST_CASE("two-point average is the identity for y = x") {
  const EulerAngles a{0.3, 1.1, -0.7};
  const SpatialPoint x(3, 1, -2);
  CHECK((averaged_two_point(x, x, a, 10, 1.0) - Mat2::Identity()).norm() < 1e-14);
}

TEST_CASE("gamma matrices satisfy their Clifford algebras") {
  const auto& g = dirac_gammas();
  const auto& e = euclidean_gammas();
  const double metric[4] = {1, -1, -1, -1};
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      const Mat4c I = Mat4c::Identity();
      CHECK((g[m] * g[n] + g[n] * g[m] - 2 * (m == n ? metric[m] : 0.0) * I).norm() < 1e-15);
      CHECK((e[m] * e[n] + e[n] * e[m] - 2 * (m == n ? 1.0 : 0.0) * I).norm() < 1e-15);
    }
  for (const auto& m : e) CHECK((m - m.adjoint()).norm() < 1e-15);
}

TEST_CASE("p-slash squares to p^2; t_hat has condition number 3") {
  const FourVector p{0.7, 0.3, -0.2, 0.5};
  const Mat8c ps = DiracColorMatrix::slash(p).m;
  const double p2 = 0.49 - 0.09 - 0.04 - 0.25;
  CHECK((ps * ps - p2 * Mat8c::Identity()).norm() < 1e-14);
  CHECK(DiracColorMatrix::t_hat(1.0).condition_number() == doctest::Approx(3).epsilon(1e-12));
  CHECK_THROWS_AS(DiracColorMatrix::t_hat(0), DomainError);
}

TEST_CASE("averaged propagator decays as 1/L") {
  const FourVector p{0.7, 0.3, -0.2, 0.5};
  const auto t = DiracColorMatrix::t_hat(1.0);
  const double a = momentum_green_average(p, t, 100).norm * 100;
  const double b = momentum_green_average(p, t, 1000).norm * 1000;
  CHECK(b == doctest::Approx(a).epsilon(0.02));
}

TEST_CASE("a singular term in the window is reported") {
  const auto t = DiracColorMatrix::t_hat(1.0);
  try {
    momentum_green_average({0, 0, 0, 0}, t, 4);
    FAIL("expected SingularTermError");
  } catch (const SingularTermError& e) {
    CHECK(e.n() == 0);
  }
}

TEST_CASE("power-law fit recovers exact data") {
  const std::vector<double> x{1, 10, 100}, y{3, 3 / std::pow(10, 1.5), 3 / std::pow(100, 1.5)};
  const PowerLawFit f = fit_power_law(x, y);
  CHECK(f.C == doctest::Approx(3));
  CHECK(f.gamma == doctest::Approx(1.5));
  CHECK_THROWS_AS(fit_power_law({1}, {1}), DomainError);
}

TEST_CASE("loop integrand is the trace formula") {
  const FourVector p{0.1, 0.2, 0.3, 0.4}, k{-0.3, 0.1, 0.0, 0.2};
  const double m = 0.1;
  const double pk = -0.03 + 0.02 + 0.0 + 0.08, pp = 0.3, kk = 0.14;
  CHECK(loop_integrand(p, k, m, LoopStructure::Scalar) ==
        doctest::Approx(8 * (pk - m * m) / ((pp + m * m) * (kk + m * m))));
}

TEST_CASE("shifted loop: zero shift is exact, large shifts are rejected") {
  LoopGrid grid;
  grid.shift = {0, 0, 0, 0};
  const auto r = shifted_loop_average({0.3, 0.1, 0, 0}, LoopStructure::Scalar, grid, 8);
  CHECK(r.difference == 0);
  CHECK(r.surface_term == 0);
  LoopGrid big;
  big.shift = {0.25, 0, 0, 0};
  CHECK_THROWS_AS(shifted_loop_average({0, 0, 0, 0}, LoopStructure::Scalar, big, 8), DomainError);
  LoopGrid odd;
  odd.spacing = 0.3;
  CHECK_THROWS_AS(odd.validate(), DomainError);
}

TEST_CASE("shifted loop difference approaches the surface term") {
  LoopGrid grid;
  grid.cutoff = 4;
  const auto r = shifted_loop_average({0.3, 0.1, 0, 0}, LoopStructure::Scalar, grid, 8);
  CHECK(r.surface_term == doctest::Approx(2 * std::pow(1.0 / 16, 2) * (60.0 / 9) / (8 * kPi * kPi)));
  CHECK(r.difference == doctest::Approx(r.surface_term).epsilon(0.02));
}

TEST_CASE("color ratio") {
  CHECK(color_ratio_check(3).in_band);
  CHECK_FALSE(color_ratio_check(4).in_band);
  CHECK_THROWS_AS(color_ratio_check(0), DomainError);
}
