#include <doctest.h>

#include "ymvac/quadrature.hpp"
#include "ymvac/su2.hpp"

using namespace ymvac;

TEST_CASE("Pauli algebra: tau^a tau^b = delta + i eps tau^c") {
  const auto& t = pauli();
  const cplx i{0, 1};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Mat2 expect = (a == b ? 1.0 : 0.0) * Mat2::Identity();
      for (int c = 0; c < 3; ++c) expect += i * double(levi_civita(a, b, c)) * t[c];
      CHECK((t[a] * t[b] - expect).norm() < 1e-15);
    }
}

TEST_CASE("exp of -i tau.w is cos|w| - i sin|w| tau.w/|w|") {
  const Vec3 w{0.3, -1.1, 0.7};
  const double a = norm(w);
  const Mat2 expect = std::cos(a) * Mat2::Identity() -
                      cplx(0, 1) * (std::sin(a) / a) * pauli_dot(w);
  const GroupElement g = exp(AlgebraElement::from_rotation_vector(w));
  CHECK((g.matrix() - expect).norm() < 1e-15);
  CHECK(GroupElement::unitarity_defect(g.matrix()) < 1e-15);
  CHECK(GroupElement::det_defect(g.matrix()) < 1e-15);
  const Vec3 back = AlgebraElement::from_rotation_vector(w).rotation_vector();
  for (int k = 0; k < 3; ++k) CHECK(back[k] == doctest::Approx(w[k]).epsilon(1e-15));
}

TEST_CASE("GroupElement rejects non-unitary matrices") {
  Mat2 m = Mat2::Identity();
  m(0, 0) = 2;
  CHECK_THROWS_AS(GroupElement{m}, DomainError);
  CHECK_THROWS_AS(AlgebraElement{Mat2::Identity()}, DomainError);
}

TEST_CASE("color vector and matrix potential round trip") {
  const Vec3 c{0.2, -0.4, 1.3};
  const Vec3 back = matrix_to_color(color_to_matrix(c, 1.7), 1.7);
  for (int k = 0; k < 3; ++k) CHECK(back[k] == doctest::Approx(c[k]).epsilon(1e-15));
}

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  const GaussRule r = gauss_legendre(8);
  double s = 0, s14 = 0;
  for (std::size_t k = 0; k < r.nodes.size(); ++k) {
    s += r.weights[k];
    s14 += r.weights[k] * std::pow(r.nodes[k], 14);
  }
  CHECK(s == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(s14 == doctest::Approx(2.0 / 15).epsilon(1e-14));
}

TEST_CASE("ball quadrature: volume of a ball and a Gaussian over all space") {
  QuadratureSpec q;
  q.r_max = 60;
  q.n_r = 128;
  const double vol = integrate_ball(q, 1.0, [](const SpatialPoint&) { return 1.0; });
  CHECK(vol == doctest::Approx(4 * kPi * std::pow(60.0, 3) / 3).epsilon(1e-12));

  QuadratureSpec inf;
  const double gauss =
      integrate_ball(inf, 1.0, [](const SpatialPoint& p) { return std::exp(-p.r() * p.r()); });
  CHECK(gauss == doctest::Approx(std::pow(kPi, 1.5)).epsilon(1e-10));
}

TEST_CASE("quadrature spec validation") {
  QuadratureSpec q;
  q.r_max = 10;
  CHECK_THROWS_AS(q.validate(1.0), DomainError);
  QuadratureSpec coarse;
  coarse.n_theta = 4;
  CHECK_THROWS_AS(coarse.validate(1.0), DomainError);
}

TEST_CASE("compensated sum is order independent") {
  CompensatedSum<> a, b;
  const double v[] = {1e16, 1.0, -1e16, 3.0};
  for (double x : v) a += x;
  for (int i = 3; i >= 0; --i) b += v[i];
  CHECK(a.value() == 4.0);
  CHECK(b.value() == 4.0);
}
