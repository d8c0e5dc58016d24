#pragma once

#include <array>
#include <functional>
#include <string>

#include "ymvac/bps_profiles.hpp"
#include "ymvac/quadrature.hpp"
#include "ymvac/stencil.hpp"
#include "ymvac/su2.hpp"

namespace ymvac {

/// Radial profile f0 of a Gribov factor with its derivative. scale is the
/// length on which it varies (used for contract checks and quadrature maps).
struct RadialProfile {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  double scale = 1.0;
  std::string name;

  /// Throws ContractError unless f(0) = 0 and f(1e3 scale) is within 1e-2 of 1.
  void check_boundary_conditions() const;
};

/// f01_bps(r, eps) = eps f0_bps(r, eps).
RadialProfile bps_phase_profile(double eps);

/// Three matrices indexed by the spatial direction.
using MatrixTriple = std::array<Mat2, 3>;

/// v^(n)(x) = exp(-i pi n f(r) tau.n_hat).
GroupElement gribov_factor(int n, const SpatialPoint& x, const RadialProfile& profile);

/// Analytic d_i v^(n)(x).
MatrixTriple gribov_factor_gradient(int n, const SpatialPoint& x, const RadialProfile& profile);

enum class DerivativeMethod { Analytic, FiniteDifference };

/// Pure gauge (d_i v) v^-1 of v^(n). With D = d - A_hat this is the gauge
/// potential of the classical vacuum generated by v^(n).
MatrixTriple pure_gauge(int n, const SpatialPoint& x, const RadialProfile& profile,
                        DerivativeMethod method = DerivativeMethod::Analytic,
                        const StencilConfig& stencil = {});

/// -1/(24 pi^2) eps^ijk tr[L_i L_j L_k] at one point.
double degree_density(const MatrixTriple& L);

struct DegreeResult {
  double value = 0;          // at the requested resolution
  double refined = 0;        // at doubled node counts
  double resolution_gap = 0;
};

/// Degree of the map of v^(n) over the quadrature ball. Throws
/// ResolutionError when value and refined differ by more than 1e-2.
DegreeResult map_degree(int n, const QuadratureSpec& quad, const RadialProfile& profile,
                        DerivativeMethod method = DerivativeMethod::Analytic);

/// For v = exp(-i beta(r) tau.n) the degree density integrates to
/// (1/pi)[beta - sin(beta) cos(beta)] between the radial end points.
double degree_radial_oracle(int n, const RadialProfile& profile, double r_max);

/// A_hat_i = g tau^a A_i^a / (2i) for each direction.
MatrixTriple to_matrix_potential(const Tensor3& A, double g);
Tensor3 from_matrix_potential(const MatrixTriple& A_hat, double g);

struct WindingReport {
  double value = 0;
  double tail = 0;       // contribution of the outermost radial shell
  bool tail_ok = true;   // |tail| < 1e-3 max(1, |value|)
};

/// X[A] = -1/(8 pi^2) int d^3x eps^ijk tr[A_i d_j A_k - (2/3) A_i A_j A_k]
/// with A_hat = g tau.A/(2i). Derivatives by central differences with a step
/// that grows with r (stencil.h times max(1, r/eps)).
WindingReport winding_functional(const ColorAlgebraField& A, const QuadratureSpec& quad, double g,
                                 double eps, const StencilConfig& stencil);

using GroupField = std::function<GroupElement(const SpatialPoint&)>;
using GroupGradient = std::function<MatrixTriple(const SpatialPoint&)>;

/// A_hat -> v A_hat v^-1 + (d v) v^-1, returned in component form. The
/// gradient of v is supplied analytically or taken by central differences.
ColorAlgebraField gauge_transform(const ColorAlgebraField& A, GroupField v, GroupGradient dv,
                                  double g);
ColorAlgebraField gauge_transform(const ColorAlgebraField& A, GroupField v, double g,
                                  const StencilConfig& stencil);
/// Transform by v^(n) with its analytic gradient.
ColorAlgebraField gauge_transform(const ColorAlgebraField& A, int n, const RadialProfile& profile,
                                  double g);

/// -1/(8 pi^2) closed-surface integral over r = R of n_i eps^ijk tr[(v A_j v^-1) L_k]:
/// the boundary term by which X[A^(n)] - X[A] differs from the degree.
/// Returns 0 for an unbounded quadrature ball.
double winding_surface_term(const ColorAlgebraField& A, int n, const RadialProfile& profile,
                            const QuadratureSpec& quad, double g);

/// exp(-8 pi^2 (n_out - n_in)/g^2).
double instanton_amplitude(int n_out, int n_in, double g);

}  // namespace ymvac
