#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ymvac/common.hpp"

namespace ymvac {

/// Roots l1 <= l2 of l^2 + l = n: -(1 + sqrt(1+4n))/2 and (-1 + sqrt(1+4n))/2.
std::pair<double, double> golden_roots(int n);

/// V_n(z) = d z^l1 + c z^l2 solving V'' + (2/z) V' - (n/z^2) V = 0.
struct EulerSolution {
  int n = 0;
  double d = 0;
  double c = 0;
  double l1 = 0;
  double l2 = 0;

  /// Exponents from golden_roots(n).
  static EulerSolution make(int n, double d, double c);
  /// d0 = -1/(4 pi), c0 = 0: the Coulomb branch.
  static EulerSolution coulomb();
  /// d1 = 1/(4 pi), c1 configurable (default 1).
  static EulerSolution golden(double c1 = 1.0);

  /// Throws ContractError unless l1 < 0 < l2 + 1, l1 + l2 = -1, l1 l2 = -n.
  void check_invariants(double tol = 1e-12) const;

  double value(double z) const;
  double derivative(double z) const;
  double second_derivative(double z) const;
};

/// Residual of the Euler equation, differentiated term by term and divided by
/// the largest of |V''|, |2V'/z|, |n V/z^2| so that it is scale free.
/// Throws DomainError for z <= 0.
double euler_residual(const EulerSolution& sol, double z);

/// f'' + f (f^2 - 1)/r^2. The second derivative is taken analytically when
/// supplied, otherwise by a five-point stencil with step 1e-3 r.
double radial_ym_residual(const std::function<double(double)>& f, double r);
double radial_ym_residual(const std::function<double(double)>& f,
                          const std::function<double(double)>& f_second, double r);

enum class FixedPoint { Zero, PlusOne, MinusOne, Diverged, Unclassified };
const char* to_string(FixedPoint fp);

struct RadialTrajectory {
  std::vector<double> r;
  std::vector<double> f;
  std::vector<double> df;
  FixedPoint classification = FixedPoint::Unclassified;
  double terminal_distance = 0;   // distance of f(r_end) to the nearest fixed point
  double blowup_radius = 0;       // set when classification == Diverged
};

struct ShootOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double blowup = 1e6;
  /// Terminal distance below which the trajectory is attributed to a fixed point.
  double capture = 0.25;
};

/// Integrates f'' = f (1 - f^2)/r^2 over r_span with an adaptive embedded
/// Runge-Kutta (Dormand-Prince 5(4)).
RadialTrajectory shoot_radial(double f0, double f0_slope, std::pair<double, double> r_span,
                              const ShootOptions& opts = {});

using ColorMatrix = Eigen::Matrix3d;

/// G^{ab}(x, y) = n^a(x) n^b(y) V0(z) + [P(x) P(y)]^{ab} V1(z), z = |x - y|,
/// with the transverse projector P = 1 - n n^T standing in for the frame sum.
class GreenTensor {
 public:
  GreenTensor(EulerSolution sol0, EulerSolution sol1);

  /// Throws DomainError if x or y is at the origin or x = y.
  ColorMatrix evaluate(const SpatialPoint& x, const SpatialPoint& y) const;
  /// Source at the monopole centre, approached along y_dir: z = |x| and
  /// n(y) is the fixed unit vector y_dir.
  ColorMatrix evaluate_centered(const SpatialPoint& x, const Vec3& y_dir) const;

  const EulerSolution& sol0() const { return sol0_; }
  const EulerSolution& sol1() const { return sol1_; }

 private:
  EulerSolution sol0_;
  EulerSolution sol1_;
};

/// Requires sol0.n == 0 and sol1.n == 1 (ContractError otherwise).
GreenTensor green_tensor(const EulerSolution& sol0, const EulerSolution& sol1);

/// delta^{ab} Lap - (n^a n^b + delta^{ab})/r^2 + 2 (n^a/r d^b - n^b/r d^a), applied in x
/// with fourth-order central differences of step h to the color-matrix field G(., b).
/// Returns the operator image as a 3x3 matrix (rows a, columns b).
ColorMatrix monopole_operator(const std::function<ColorMatrix(const SpatialPoint&)>& G,
                              const SpatialPoint& x, double h);

/// Largest absolute entry of the operator image of the centred tensor.
double green_operator_residual(const GreenTensor& G, const SpatialPoint& x, const Vec3& y_dir,
                               double h);
/// Same with the source at a general point y (diagnostic; not annihilated).
double green_operator_residual_offcentre(const GreenTensor& G, const SpatialPoint& x,
                                         const SpatialPoint& y, double h);

}  // namespace ymvac
