#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace ymvac {

inline constexpr double kPi = std::numbers::pi;

using Vec3 = std::array<double, 3>;

// A[i][a]: spatial index i, color index a.
using Tensor3 = std::array<std::array<double, 3>, 3>;

inline double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}
inline Vec3 operator+(Vec3 u, const Vec3& v) {
  for (int i = 0; i < 3; ++i) u[i] += v[i];
  return u;
}
inline Vec3 operator-(Vec3 u, const Vec3& v) {
  for (int i = 0; i < 3; ++i) u[i] -= v[i];
  return u;
}
inline Vec3 operator*(double s, Vec3 v) {
  for (auto& c : v) c *= s;
  return v;
}

inline Tensor3 operator+(Tensor3 a, const Tensor3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] += b[i][j];
  return a;
}
inline Tensor3 operator-(Tensor3 a, const Tensor3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] -= b[i][j];
  return a;
}
inline Tensor3 operator*(double s, Tensor3 t) {
  for (auto& row : t)
    for (auto& c : row) c *= s;
  return t;
}
inline double frobenius(const Tensor3& t) {
  double s = 0;
  for (const auto& row : t)
    for (double c : row) s += c * c;
  return std::sqrt(s);
}

/// Totally antisymmetric symbol on {0,1,2}.
constexpr int levi_civita(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;
}

/// Point in space, lengths in GeV^-1.
class SpatialPoint {
 public:
  SpatialPoint() = default;
  explicit SpatialPoint(const Vec3& x) : x_(x), r_(norm(x)) {}
  SpatialPoint(double x, double y, double z) : SpatialPoint(Vec3{x, y, z}) {}

  const Vec3& x() const { return x_; }
  double operator[](int i) const { return x_[i]; }
  double r() const { return r_; }
  /// Unit radius vector; zero vector at the origin.
  Vec3 n_hat() const { return r_ > 0 ? (1.0 / r_) * x_ : Vec3{0, 0, 0}; }
  SpatialPoint shifted(int axis, double delta) const {
    Vec3 y = x_;
    y[axis] += delta;
    return SpatialPoint(y);
  }

 private:
  Vec3 x_{0, 0, 0};
  double r_ = 0;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a finite-difference stencil would reach a singular point.
class StencilError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition on a supplied function (e.g. profile boundary values) violated.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent evaluation paths disagree beyond their tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature did not resolve the integrand.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Neumaier compensated summation; result is independent of magnitude ordering
/// to a few ulps.
template <typename T = double>
class CompensatedSum {
 public:
  void add(T v) {
    if constexpr (std::is_floating_point_v<T>) {
      add_real(sum_, comp_, v);
    } else {
      // complex
      double sr = sum_.real(), si = sum_.imag(), cr = comp_.real(), ci = comp_.imag();
      add_real(sr, cr, v.real());
      add_real(si, ci, v.imag());
      sum_ = T(sr, si);
      comp_ = T(cr, ci);
    }
  }
  CompensatedSum& operator+=(T v) {
    add(v);
    return *this;
  }
  T value() const { return sum_ + comp_; }

 private:
  static void add_real(double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  T sum_{};
  T comp_{};
};

}  // namespace ymvac
