#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "ymvac/su2.hpp"

namespace ymvac {

/// Euler angles of u(phi) = e^{i tau1 phi1/2} e^{i tau2 phi2/2} e^{i tau3 phi3/2}.
struct EulerAngles {
  double phi1 = 0;
  double phi2 = 0;
  double phi3 = 0;

  GroupElement u() const;
  /// Omega_ab = (1/2) tr(tau^a u tau^b u^-1), a rotation matrix.
  Eigen::Matrix3d adjoint() const;
  /// phi1 + phi2 + phi3 = 4 pi n for an integer n (the scalar reading of the
  /// dressing constraint). Reported, never enforced.
  bool satisfies_constraint(double tol = 1e-9) const;
  /// round((phi1 + phi2 + phi3)/(4 pi)).
  long constraint_winding() const;
};

/// v^(n)(x) = exp(c i pi n f01(r) tau^a Omega_ab n^b) with c = prefactor (2 by
/// default), i.e. u exp(2 pi i n f01 tau.n_hat) u^-1. Identity at the origin.
GroupElement dressed_factor(int n, const EulerAngles& angles, const SpatialPoint& x, double eps,
                            double prefactor = 2.0);

/// Integers n in [-floor(L/2), floor(L/2)].
std::pair<int, int> symmetric_window(int L);

/// (1/count) sum over the symmetric window of v^(n)(x) v^(n)(-y), the two
/// factors dressed with their own angles.
Mat2 averaged_two_point(const SpatialPoint& x, const SpatialPoint& y, const EulerAngles& angles_x,
                        const EulerAngles& angles_y, int L, double eps);
Mat2 averaged_two_point(const SpatialPoint& x, const SpatialPoint& y, const EulerAngles& angles,
                        int L, double eps);

using Mat4c = Eigen::Matrix4cd;
using Mat8c = Eigen::Matrix<cplx, 8, 8>;
using FourVector = std::array<double, 4>;

/// Dirac-representation gamma^mu, metric (+,-,-,-).
const std::array<Mat4c, 4>& dirac_gammas();
/// Hermitian Euclidean gammas: gamma_E^0 = gamma^0, gamma_E^j = -i gamma^j.
const std::array<Mat4c, 4>& euclidean_gammas();

/// 8x8 operator on spinor (x) color, spinor-major ordering.
struct DiracColorMatrix {
  Mat8c m = Mat8c::Zero();

  static DiracColorMatrix kron(const Mat4c& spinor, const Mat2& color);
  /// p_mu gamma^mu (x) 1 for contravariant components p^mu.
  static DiracColorMatrix slash(const FourVector& p);
  /// sum_a gamma^a (x) tau^a (pi/r_ref).
  static DiracColorMatrix t_hat(double r_ref);

  double condition_number() const;
  double norm() const;  // largest singular value
};

/// Thrown when p_hat + t_hat n is numerically singular for some n in the window.
class SingularTermError : public std::runtime_error {
 public:
  SingularTermError(int n, double condition);
  int n() const { return n_; }

 private:
  int n_;
};

struct MomentumAverage {
  DiracColorMatrix S;
  double norm = 0;
  double max_condition = 0;
  int terms = 0;
};

/// Sum of (p_hat + t n)^-1 over n_lo..n_hi divided by `normalization`.
MomentumAverage momentum_green_sum(const FourVector& p, const DiracColorMatrix& t, int n_lo,
                                   int n_hi, double normalization);
/// S_L = (1/(L+1)) sum over the symmetric window.
MomentumAverage momentum_green_average(const FourVector& p, const DiracColorMatrix& t, int L);

struct PowerLawFit {
  double C = 0;
  double gamma = 0;
};

/// Least-squares fit of y = C / x^gamma in log-log space.
PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

enum class LoopStructure { Scalar, Colored };

/// Euclidean hypercubic momentum grid [-cutoff, cutoff]^4 with midpoint nodes.
struct LoopGrid {
  double cutoff = 1.0;
  double spacing = 0.25;
  double mass = 0.1;
  FourVector shift{1.0 / 16, 0, 0, 0};  // t: the n-th term is shifted by t n

  int points_per_axis() const;
  void validate() const;
};

struct ShiftedLoopResult {
  double shifted = 0;      // window average of the shifted loops
  double unshifted = 0;
  double difference = 0;   // shifted - unshifted
  /// Continuum limit of the difference: the surface term c <(t n)^2>/(8 pi^2)
  /// of the quadratically divergent loop, c the color trace.
  double surface_term = 0;
};

/// tr[Gamma G0(p) Gamma G0(k)] for G0(p) = (p_E slash + i m)^-1 with Hermitian
/// Euclidean gammas, including the color trace (2 for both structures).
double loop_integrand(const FourVector& p, const FourVector& k, double m, LoopStructure s);

/// (1/(L+1)) sum_n int d^4p/(2 pi)^4 tr[Gamma G0(p + t n) Gamma G0(q - p - t n)] over the
/// grid, next to the n = 0 loop. Throws DomainError if |t| L exceeds cutoff/2.
ShiftedLoopResult shifted_loop_average(const FourVector& q, LoopStructure s, const LoopGrid& grid,
                                       int L);

struct ColorRatio {
  double prediction = 0;
  bool in_band = false;  // within the measured 3.3 +- 0.3
};

ColorRatio color_ratio_check(int nc);

}  // namespace ymvac
