#include "ymvac/su2.hpp"

#include <Eigen/Eigenvalues>

namespace ymvac {

const std::array<Mat2, 3>& pauli() {
  static const std::array<Mat2, 3> taus = [] {
    const cplx i{0, 1};
    std::array<Mat2, 3> t;
    t[0] << 0, 1, 1, 0;
    t[1] << 0, -i, i, 0;
    t[2] << 1, 0, 0, -1;
    return t;
  }();
  return taus;
}

Mat2 pauli_dot(const Vec3& v) {
  const auto& t = pauli();
  return v[0] * t[0] + v[1] * t[1] + v[2] * t[2];
}

double spectral_norm(const Mat2& m) {
  Eigen::JacobiSVD<Mat2> svd(m);
  return svd.singularValues()(0);
}

double GroupElement::unitarity_defect(const Mat2& m) {
  return (m * m.adjoint() - Mat2::Identity()).cwiseAbs().maxCoeff();
}

double GroupElement::det_defect(const Mat2& m) { return std::abs(m.determinant() - 1.0); }

GroupElement::GroupElement(const Mat2& m) : m_(m) {
  if (unitarity_defect(m) > kTolerance) throw DomainError("matrix is not unitary");
  if (det_defect(m) > kTolerance) throw DomainError("matrix determinant is not 1");
}

AlgebraElement::AlgebraElement(const Mat2& a) : a_(a) {
  if ((a.adjoint() + a).cwiseAbs().maxCoeff() > kTolerance)
    throw DomainError("algebra element is not anti-Hermitian");
  if (std::abs(a.trace()) > kTolerance) throw DomainError("algebra element is not traceless");
}

AlgebraElement AlgebraElement::from_rotation_vector(const Vec3& w) {
  return AlgebraElement(cplx{0, -1} * pauli_dot(w));
}

Vec3 AlgebraElement::rotation_vector() const {
  // a = -i tau.w  =>  w^a = (i/2) tr(tau^a a)
  const auto& t = pauli();
  Vec3 w;
  for (int k = 0; k < 3; ++k) w[k] = (cplx{0, 0.5} * (t[k] * a_).trace()).real();
  return w;
}

GroupElement exp(const AlgebraElement& a) {
  const Vec3 w = a.rotation_vector();
  const double angle = norm(w);
  Mat2 m = std::cos(angle) * Mat2::Identity();
  if (angle > 0) m += cplx{0, -std::sin(angle) / angle} * pauli_dot(w);
  return GroupElement(m);
}

Mat2 color_to_matrix(const Vec3& color, double g) {
  return cplx{0, -0.5 * g} * pauli_dot(color);
}

Vec3 matrix_to_color(const Mat2& m, double g) {
  // m = (g/2i) tau^b A^b  =>  tr(tau^a m) = -i g A^a
  const auto& t = pauli();
  Vec3 c;
  for (int k = 0; k < 3; ++k) c[k] = (cplx{0, 1} * (t[k] * m).trace()).real() / g;
  return c;
}

}  // namespace ymvac
