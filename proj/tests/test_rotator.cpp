#include <doctest.h>

#include "ymvac/rotator.hpp"

using namespace ymvac;

TEST_CASE("theta3 special values") {
  // Theta_3(0|i) = pi^(1/4)/Gamma(3/4)
  CHECK(theta3({0, cplx(0, 1)}).real() == doctest::Approx(1.0864348112133080).epsilon(1e-15));
  CHECK(theta3({0, cplx(0, 10)}).real() == doctest::Approx(1 + 2 * std::exp(-10 * kPi)).epsilon(1e-15));
  CHECK_THROWS_AS(theta3({0, cplx(0.5, 0)}), DomainError);
}

TEST_CASE("modular identity holds across the upper half plane") {
  for (double zr : {-0.7, 0.1, 1.3})
    for (double ti : {0.3, 1.2, 3.0}) CHECK(theta_modular_defect({cplx(zr, 0.1 * zr), cplx(0.2 * zr, ti)}) < 1e-12);
}

TEST_CASE("spectral, theta-form and winding sums agree in Euclidean time") {
  for (double th : {0.0, kPi / 2, kPi})
    for (double dN : {0.0, 0.3, 1.0})
      for (double tau : {0.3, 1.0, 3.0})
        for (double I : {0.5, 1.0, 5.0}) {
          const auto p = RotatorParams::euclidean(I, th, tau, dN);
          const cplx s = spectral_green(p);
          CHECK(std::abs(s - path_green(p)) < 1e-12);
          CHECK(std::abs(s - spectral_green_theta(p)) < 1e-12);
        }
}

TEST_CASE("long-time limit projects on the ground state") {
  const auto p = RotatorParams::euclidean(1, 0, 200, 0);
  CHECK(spectral_green(p).real() == doctest::Approx(1 / (2 * kPi)).epsilon(1e-14));
}

TEST_CASE("winding terms sum to the path representation") {
  const auto p = RotatorParams::euclidean(1, 0.4, 1, 0.3);
  cplx sum = 0;
  for (const cplx& t : path_green_terms(p, -30, 30)) sum += t;
  CHECK(std::abs(sum - path_green(p)) < 1e-14);
}

TEST_CASE("only Euclidean time is accepted") {
  RotatorParams p;
  p.time = {1.0, 0.0};
  CHECK_THROWS_AS(p.validated(), DomainError);
  p.time = {0.0, -1.0};
  p.inertia = 0;
  CHECK_THROWS_AS(p.validated(), DomainError);
  CHECK_THROWS_AS(spectral_green(p), DomainError);
}

TEST_CASE("theta normalization and window") {
  CHECK(normalize_theta(-kPi / 2) == doctest::Approx(3 * kPi / 2));
  CHECK(normalize_theta(4 * kPi + 0.5) == doctest::Approx(0.5));
  CHECK(RotatorParams::euclidean(1, 3 * kPi / 2, 1).validated().theta_in_quoted_window() == false);
  const auto spec = bloch_spectrum(0.3, -1, 1);
  REQUIRE(spec.size() == 3);
  CHECK(spec[0] == doctest::Approx(0.3 - 2 * kPi));
}

TEST_CASE("averaged wavefunction: unit modulus on the spectrum, bounded off it") {
  const double th = 0.7;
  CHECK(std::abs(averaged_wavefunction(2 * kPi * 3 + th, th, 1000)) == doctest::Approx(1).epsilon(1e-13));
  CHECK(std::abs(averaged_wavefunction(2 * kPi - th, th, 1000, PhaseConvention::AsPrinted)) ==
        doctest::Approx(1).epsilon(1e-13));
  for (double p : {th + 0.1, th + 1.0, th + kPi}) {
    const double a = std::abs(averaged_wavefunction(p, th, 1000));
    CHECK(a <= interference_bound(p, th, 1000) * (1 + 1e-12));
  }
  CHECK(std::isinf(interference_bound(th, th, 10)));
  // Exact geometric sum: |sin((2L+1) d/2)/((2L+1) sin(d/2))|
  const double d = 0.37;
  const double exact = std::abs(std::sin(21 * d / 2) / (21 * std::sin(d / 2)));
  CHECK(std::abs(averaged_wavefunction(th + d, th, 10)) == doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("electric spectra") {
  const MonopoleScale sc = MonopoleScale::from_alpha(0.24, 2.0);
  CHECK(electric_spectrum(1, 0.5, sc) == doctest::Approx((2 * kPi + 0.5) * 0.24 / (kPi * kPi * 2.0)));
  CHECK(abelian_electric_field(2, kPi, 0.3) == doctest::Approx(0.3 * 2.5));
}
