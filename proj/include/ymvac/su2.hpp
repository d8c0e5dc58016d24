#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "ymvac/common.hpp"

namespace ymvac {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

/// Pauli matrices tau^1, tau^2, tau^3.
const std::array<Mat2, 3>& pauli();

/// tau . v
Mat2 pauli_dot(const Vec3& v);

/// Largest singular value.
double spectral_norm(const Mat2& m);

/// 2x2 complex matrix with m m^dagger = 1 and det m = 1 (SU(2)).
class GroupElement {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Throws DomainError if m is not unitary unimodular to kTolerance.
  explicit GroupElement(const Mat2& m);
  static GroupElement identity() { return GroupElement(Mat2::Identity(), Unchecked{}); }

  const Mat2& matrix() const { return m_; }
  GroupElement inverse() const { return GroupElement(m_.adjoint(), Unchecked{}); }
  GroupElement operator*(const GroupElement& o) const { return GroupElement(m_ * o.m_, Unchecked{}); }
  double distance_to_identity() const { return spectral_norm(m_ - Mat2::Identity()); }

  static double unitarity_defect(const Mat2& m);
  static double det_defect(const Mat2& m);

 private:
  struct Unchecked {};
  GroupElement(const Mat2& m, Unchecked) : m_(m) {}
  Mat2 m_;
};

/// Anti-Hermitian traceless 2x2 matrix (su(2)).
class AlgebraElement {
 public:
  static constexpr double kTolerance = 1e-12;

  explicit AlgebraElement(const Mat2& a);
  /// -i (tau . w): the generator whose exponential rotates by |w| about w.
  static AlgebraElement from_rotation_vector(const Vec3& w);

  const Mat2& matrix() const { return a_; }
  /// Real vector w with a = -i tau.w.
  Vec3 rotation_vector() const;

 private:
  Mat2 a_;
};

/// exp(a) in closed form: cos|w| - i sin|w| (tau . w/|w|).
GroupElement exp(const AlgebraElement& a);

/// Color vector <-> matrix under A_hat = g tau^a A^a / (2i).
Mat2 color_to_matrix(const Vec3& color, double g);
Vec3 matrix_to_color(const Mat2& m, double g);

}  // namespace ymvac
