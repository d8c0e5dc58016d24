#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ymvac/common.hpp"
#include "ymvac/stencil.hpp"

namespace ymvac {

/// Coupling g and BPS size eps (GeV^-1). alpha_s = g^2/(4 pi) is derived.
class MonopoleScale {
 public:
  MonopoleScale(double g, double eps);
  /// Scale with the given alpha_s (g = sqrt(4 pi alpha_s)).
  static MonopoleScale from_alpha(double alpha_s, double eps);

  double g() const { return g_; }
  double eps() const { return eps_; }
  double alpha_s() const { return g_ * g_ / (4 * kPi); }

 private:
  double g_;
  double eps_;
};

// Radial BPS profiles. All accept r >= 0 and use series expansions near the
// origin and exponential forms far out so no cancellation or overflow occurs.

/// 1/(eps tanh(r/eps)) - 1/r, in GeV. Zero at the origin.
double f0_bps(double r, double eps);
double f0_bps_prime(double r, double eps);
/// 1 - (r/eps)/sinh(r/eps). Zero at the origin, tends to 1.
double f1_bps(double r, double eps);
double f1_bps_prime(double r, double eps);
/// Gribov-phase profile 1/tanh(r/eps) - eps/r = eps f0_bps.
double f01_bps(double r, double eps);
double f01_bps_prime(double r, double eps);

/// Extended precision (x87 long double on x86-64) used where finite
/// differences would otherwise hit double round-off.
using XReal = long double;
using Vec3X = std::array<XReal, 3>;
using Tensor3X = std::array<std::array<XReal, 3>, 3>;

XReal f0_bps_x(XReal r, XReal eps);
XReal f1_bps_x(XReal r, XReal eps);
XReal f01_bps_x(XReal r, XReal eps);

/// Sampler x -> A[i][a] (GeV). When `extended` is set, the finite-difference
/// operators below sample through it and difference in extended precision.
struct ColorAlgebraField {
  std::function<Tensor3(const SpatialPoint&)> sampler;
  bool singular_at_origin = false;
  std::function<Tensor3X(const Vec3X&)> extended;

  Tensor3 operator()(const SpatialPoint& p) const;
  static ColorAlgebraField zero();
};

/// Sampler x -> phi^a (GeV), optional extended-precision twin as above.
struct ColorScalarField {
  std::function<Vec3(const SpatialPoint&)> sampler;
  bool singular_at_origin = false;
  std::function<Vec3X(const Vec3X&)> extended;

  Vec3 operator()(const SpatialPoint& p) const;
  static ColorScalarField zero();
  static ColorScalarField constant(const Vec3& c);
};

enum class FieldVariant { BPS, WuYangPlus, WuYangMinus, PT };

const char* to_string(FieldVariant v);

/// Gauge field with its companion scalar. For BPS the scalar is the Higgs
/// field; for Wu-Yang variants it is the Gribov phase (2 pi/g) n^a f01(r),
/// which equals scalar_scale times the Higgs normalization x^a f0/(g r).
struct FieldPair {
  ColorAlgebraField gauge;
  ColorScalarField scalar;
  FieldVariant variant;
  double scalar_scale = 1.0;
};

/// Hedgehog gauge field eps_{iak} x^k f(r)/(g r^2). f_ext, if given, is the
/// same profile in extended precision.
ColorAlgebraField hedgehog_gauge_field(double g, std::function<double(double)> f, bool singular,
                                       std::function<XReal(XReal)> f_ext = {});

/// Gribov phase as a color vector: (2 pi/g) n^a f01(r). This is the component
/// form of -i pi (tau.n) f01 under A_hat = g tau.A/(2i).
ColorScalarField gribov_phase_field(const MonopoleScale& scale);

FieldPair build_fields(const MonopoleScale& scale, FieldVariant variant);

/// B_i^a = eps_ijk (d_j A_k^a - (g/2) eps^abc A_j^b A_k^c).
///
/// The self-coupling sign corresponds to D = d - A_hat with
/// A_hat = g tau^a A^a/(2i); with it the hedgehog ansatz satisfies B = +D phi
/// and the f = 1 field gives B_i^a = x^a x^i/(g r^4).
Tensor3 magnetic_tension(const ColorAlgebraField& A, const SpatialPoint& x,
                         const StencilConfig& stencil, double g);

/// (D_i phi)^a = d_i phi^a - g eps^abc A_i^b phi^c, same convention.
Tensor3 covariant_derivative(const ColorAlgebraField& A, const ColorScalarField& phi,
                             const SpatialPoint& x, const StencilConfig& stencil, double g);

/// (D_i D_i phi)^a by nesting covariant_derivative.
///
/// The three operators use extended precision when every field involved has
/// an extended sampler, double otherwise.
Vec3 covariant_laplacian(const ColorAlgebraField& A, const ColorScalarField& phi,
                         const SpatialPoint& x, const StencilConfig& stencil, double g);

struct BogomolnyiReport {
  double max_relative = 0;
  std::vector<double> per_point;
  bool exact_zero = false;  // both sides vanish identically (PT)
};

/// max over points of |B - sign D phi / scalar_scale| / |B|.
BogomolnyiReport bogomolnyi_residual(const FieldPair& pair, std::span<const SpatialPoint> points,
                                     const StencilConfig& stencil, double g, int sign = +1);
BogomolnyiReport bogomolnyi_residual(const MonopoleScale& scale,
                                     std::span<const SpatialPoint> points,
                                     const StencilConfig& stencil, int sign = +1);

/// [D^2(A_BPS)] Phi_0 for the Gribov phase; vanishes up to stencil error.
Vec3 gribov_residual(const MonopoleScale& scale, const SpatialPoint& x,
                     const StencilConfig& stencil);

}  // namespace ymvac
