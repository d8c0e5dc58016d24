#include <doctest.h>

#include <sstream>

#include "ymvac/constants_file.hpp"
#include "ymvac/pheno.hpp"

using namespace ymvac;

static_assert(std::is_same_v<decltype(GeV<1>{} * GeV<-3>{}), GeV<-2>>);
static_assert(std::is_same_v<decltype(1.0 / GeV<2>{}), GeV<-2>>);
static_assert((GeV<1>(2.0) + GeV<1>(1.0)).value == 3.0);

TEST_CASE("closed-form vacuum quantities") {
  const MonopoleScale sc = MonopoleScale::from_alpha(0.24, 2.0);
  CHECK(magnetic_energy(sc).value == doctest::Approx(1 / (0.24 * 2.0)));
  CHECK(rotary_momentum(sc, InertiaMethod::Formula).value == doctest::Approx(4 * kPi * kPi * 2.0 / 0.24));
  CHECK(rotary_momentum_from_energy(0.24, magnetic_energy(sc)).value ==
        doctest::Approx(rotary_momentum(sc, InertiaMethod::Formula).value));
  const double g2 = sc.g() * sc.g();
  CHECK(vacuum_hamiltonian(0, sc).value == doctest::Approx(2 * kPi / (g2 * 2.0)));
  CHECK(vacuum_hamiltonian(3, sc).value ==
        doctest::Approx(2 * kPi / (g2 * 2.0) * (9 * std::pow(g2 / (8 * kPi * kPi), 2) + 1)));
  CHECK(bogomolnyi_energy_bound(2, 3, 4) == doctest::Approx(4 * kPi * 6 / 4));
  const auto vq = vacuum_quantities(sc, GeV<-3>(10));
  CHECK(vq.b2.value == doctest::Approx(magnetic_energy(sc).value / 10));
  CHECK_THROWS_AS(vacuum_quantities(sc, GeV<-3>(0)), DomainError);
}

TEST_CASE("quadratures reproduce the closed forms") {
  const MonopoleScale sc(1.0, 1.0);
  QuadratureSpec q;
  const double I = rotary_momentum(sc, InertiaMethod::Quadrature, q).value;
  CHECK(I == doctest::Approx(4 * kPi * kPi / sc.alpha_s()).epsilon(1e-6));
  const NormalizationResult n = normalization_check(sc, q);
  CHECK(n.value == doctest::Approx(1).epsilon(1e-6));
  CHECK(n.tail_fraction > 0.05);  // the integrand falls off only as 1/r^2
  QuadratureSpec e;
  e.r_max = 1000;
  const EnergyQuadrature E = magnetic_energy_quadrature(sc, e);
  CHECK(E.value == doctest::Approx(E.truncated).epsilon(1e-6));
  CHECK(E.value / E.closed_form - 1 == doctest::Approx(-1e-3).epsilon(1e-3));
  CHECK_THROWS_AS(magnetic_energy_quadrature(sc, QuadratureSpec{}), DomainError);
}

TEST_CASE("Schwinger mass e^2/pi") {
  for (double e : {0.1, 1.0, 3.0}) {
    const SchwingerResult r = schwinger_mass(e);
    CHECK(r.value * kPi / (e * e) == doctest::Approx(1).epsilon(1e-14));
    CHECK(r.consistent);
  }
  CHECK_THROWS_AS(schwinger_mass(0), DomainError);
}

TEST_CASE("eta chain with the default calibration") {
  const PhenoInputs in;
  CHECK(b2_numerator(in).value == doctest::Approx(2 * std::pow(kPi, 3) * 0.01 * 0.87 / 9));
  CHECK(b2_estimate(in).value == doctest::Approx(b2_numerator(in).value / (0.24 * 0.24)));
  CHECK(eta_mass_shift(in, b2_estimate(in)).value == doctest::Approx(0.87).epsilon(1e-14));
  CHECK(eta_constant(in).value == doctest::Approx(3 * std::sqrt(2 / kPi) / 0.1));
}

TEST_CASE("alpha_mod_zero") {
  const PhenoInputs in;
  const double beta = 11 / (4 * kPi);
  const double expect = 1 / (beta * (1 + 2 * std::log(4 * std::cbrt(3 * std::pow(0.234, 3)) / 0.110)));
  CHECK(alpha_mod_zero(in) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(alpha_mod_zero(in) == doctest::Approx(0.18993).epsilon(1e-4));
  CHECK(alpha_mod_zero_literal(in) == doctest::Approx(1 / (beta * (1 + 2 * std::log(4 * 3 * 0.234 / 0.110)))));
  PhenoInputs low = in;
  low.v0_cuberoot = GeV<1>(0.001);
  CHECK_THROWS_AS(alpha_mod_zero(low), DomainError);
}

TEST_CASE("gluon dispersion helpers") {
  CHECK(gluon_structural_mass(5, 3) == doctest::Approx(4));
  CHECK_THROWS_AS(gluon_structural_mass(1, 2), DomainError);
  CHECK(*omega_asymptotic(0.1) == doctest::Approx(200));
  CHECK(*omega_asymptotic(10) == 10);
  CHECK_FALSE(omega_asymptotic(1).has_value());
}

TEST_CASE("input validation") {
  PhenoInputs in;
  in.n_f = 0;
  CHECK_THROWS_AS(in.validate(), DomainError);
  CHECK_THROWS_AS(eta_constant(in), DomainError);
}

TEST_CASE("constants files") {
  std::istringstream good("# comment\nalpha_s = 0.3\n\nf_pi=0.093  # GeV\nn_f = 2\n");
  const PhenoInputs in = parse_constants(good);
  CHECK(in.alpha_s == 0.3);
  CHECK(in.f_pi.value == 0.093);
  CHECK(in.n_f == 2);
  CHECK(in.n_c == 3);

  for (const char* bad : {"bogus = 1\n", "alpha_s = 0.3\nalpha_s = 0.2\n", "alpha_s = x\n",
                          "alpha_s 0.3\n", "n_f = 2.5\n", "alpha_s = -1\n", "alpha_s = inf\n"}) {
    std::istringstream s(bad);
    CHECK_THROWS_AS(parse_constants(s), ConstantsError);
  }
  std::istringstream named("\n\nvolume = abc\n");
  try {
    parse_constants(named, {}, "cfg");
    FAIL("expected ConstantsError");
  } catch (const ConstantsError& e) {
    CHECK(std::string(e.what()).find("cfg:3") != std::string::npos);
  }
  CHECK_THROWS_AS(load_constants("/nonexistent/constants.txt"), ConstantsError);
  CHECK(constants_map(PhenoInputs{}).size() == constants_keys().size());
}
