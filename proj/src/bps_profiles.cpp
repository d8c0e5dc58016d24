#include "ymvac/bps_profiles.hpp"

#include <limits>
#include <stdexcept>

namespace ymvac {

namespace {

void require_positive_eps(double eps) {
  if (!(eps > 0)) throw DomainError("BPS size eps must be positive");
}

void require_nonnegative_r(double r) {
  if (!(r >= 0)) throw DomainError("radius must be non-negative");
}

// Below this x the closed forms lose digits to cancellation; the forms used
// there have only positive terms.
constexpr double kStableCut = 2.0;

// coth(x) - 1/x via Lambert's continued fraction x/(3 + x^2/(5 + x^2/(7 + ...))).
// Depth 24 is converged to long double precision for x < 2.
template <typename T>
T coth_minus_inv(T x) {
  if (x < kStableCut) {
    const T x2 = x * x;
    T d = 49;
    for (int k = 23; k >= 1; --k) d = T(2 * k + 1) + x2 / d;
    return x / d;
  }
  const T e = std::exp(-2 * x);
  return (1 + e) / (1 - e) - 1 / x;
}

// csch(x), overflow-free.
template <typename T>
T csch(T x) {
  const T e = std::exp(-x);
  return 2 * e / -std::expm1(-2 * x);
}

// 1/x^2 - csch^2(x) = 1 - c (c + 2/x) with c = coth(x) - 1/x.
template <typename T>
T inv2_minus_csch2(T x) {
  if (x == 0) return T(1) / 3;
  if (x < kStableCut) {
    const T c = coth_minus_inv(x);
    return 1 - c * (c + 2 / x);
  }
  const T s = csch(x);
  return 1 / (x * x) - s * s;
}

// sinh(x) - x by its Taylor series (all terms positive).
template <typename T>
T sinh_minus_x(T x) {
  const T x2 = x * x;
  T term = x * x2 / 6, sum = 0;
  for (int k = 1; term > std::numeric_limits<T>::epsilon() * sum / 4 || k == 1; ++k) {
    sum += term;
    term *= x2 / T((2 * k + 2) * (2 * k + 3));
  }
  return sum;
}

// 1 - x/sinh(x)
template <typename T>
T f1_kernel(T x) {
  if (x == 0) return 0;
  if (x < kStableCut) return sinh_minus_x(x) / std::sinh(x);
  return 1 - x * csch(x);
}

}  // namespace

MonopoleScale::MonopoleScale(double g, double eps) : g_(g), eps_(eps) {
  if (!(g > 0)) throw DomainError("coupling g must be positive");
  require_positive_eps(eps);
}

MonopoleScale MonopoleScale::from_alpha(double alpha_s, double eps) {
  if (!(alpha_s > 0)) throw DomainError("alpha_s must be positive");
  return MonopoleScale(std::sqrt(4 * kPi * alpha_s), eps);
}

double f0_bps(double r, double eps) {
  require_positive_eps(eps);
  require_nonnegative_r(r);
  return coth_minus_inv(r / eps) / eps;
}

double f0_bps_prime(double r, double eps) {
  require_positive_eps(eps);
  require_nonnegative_r(r);
  return inv2_minus_csch2(r / eps) / (eps * eps);
}

double f1_bps(double r, double eps) {
  require_positive_eps(eps);
  require_nonnegative_r(r);
  return f1_kernel(r / eps);
}

double f1_bps_prime(double r, double eps) {
  require_positive_eps(eps);
  require_nonnegative_r(r);
  const double x = r / eps;
  if (x == 0) return 0;
  // (x coth x - 1)/sinh x = x (coth x - 1/x) csch x
  return x * coth_minus_inv(x) * csch(x) / eps;
}

double f01_bps(double r, double eps) { return eps * f0_bps(r, eps); }

double f01_bps_prime(double r, double eps) { return eps * f0_bps_prime(r, eps); }

XReal f0_bps_x(XReal r, XReal eps) {
  require_positive_eps(double(eps));
  require_nonnegative_r(double(r));
  return coth_minus_inv(r / eps) / eps;
}

XReal f1_bps_x(XReal r, XReal eps) {
  require_positive_eps(double(eps));
  require_nonnegative_r(double(r));
  return f1_kernel(r / eps);
}

XReal f01_bps_x(XReal r, XReal eps) { return eps * f0_bps_x(r, eps); }

Tensor3 ColorAlgebraField::operator()(const SpatialPoint& p) const {
  if (singular_at_origin && p.r() == 0) throw StencilError("gauge field sampled at its singular point r = 0");
  return sampler(p);
}

ColorAlgebraField ColorAlgebraField::zero() {
  return {[](const SpatialPoint&) { return Tensor3{}; }, false,
          [](const Vec3X&) { return Tensor3X{}; }};
}

Vec3 ColorScalarField::operator()(const SpatialPoint& p) const {
  if (singular_at_origin && p.r() == 0) throw StencilError("scalar field sampled at its singular point r = 0");
  return sampler(p);
}

ColorScalarField ColorScalarField::zero() {
  return {[](const SpatialPoint&) { return Vec3{0, 0, 0}; }, false,
          [](const Vec3X&) { return Vec3X{}; }};
}

ColorScalarField ColorScalarField::constant(const Vec3& c) {
  return {[c](const SpatialPoint&) { return c; }, false,
          [c](const Vec3X&) { return Vec3X{c[0], c[1], c[2]}; }};
}

const char* to_string(FieldVariant v) {
  switch (v) {
    case FieldVariant::BPS: return "BPS";
    case FieldVariant::WuYangPlus: return "WuYangPlus";
    case FieldVariant::WuYangMinus: return "WuYangMinus";
    case FieldVariant::PT: return "PT";
  }
  return "?";
}

namespace {

template <typename T>
using V3 = std::array<T, 3>;
template <typename T>
using T33 = std::array<std::array<T, 3>, 3>;

template <typename T>
T radius(const V3<T>& x) {
  return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

template <typename T, typename F>
T33<T> hedgehog(const V3<T>& x, T g, const F& f) {
  T33<T> A{};
  const T r = radius(x);
  if (r == 0) return A;
  const T s = f(r) / (g * r * r);
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a)
      for (int k = 0; k < 3; ++k) A[i][a] += levi_civita(i, a, k) * x[k] * s;
  return A;
}

// x^a h(r)/r, zero at the origin
template <typename T, typename F>
V3<T> radial_vector(const V3<T>& x, const F& h) {
  const T r = radius(x);
  if (r == 0) return V3<T>{};
  const T s = h(r) / r;
  return {x[0] * s, x[1] * s, x[2] * s};
}

}  // namespace

ColorAlgebraField hedgehog_gauge_field(double g, std::function<double(double)> f, bool singular,
                                       std::function<XReal(XReal)> f_ext) {
  ColorAlgebraField field{[g, f](const SpatialPoint& p) { return hedgehog(p.x(), g, f); },
                          singular, {}};
  if (f_ext)
    field.extended = [g, f_ext = std::move(f_ext)](const Vec3X& x) {
      return hedgehog<XReal>(x, g, f_ext);
    };
  return field;
}

ColorScalarField gribov_phase_field(const MonopoleScale& scale) {
  const double g = scale.g(), eps = scale.eps();
  const double c = 2 * kPi / g;
  return {[c, eps](const SpatialPoint& p) {
            return radial_vector(p.x(), [&](double r) { return c * f01_bps(r, eps); });
          },
          false,
          [c, eps](const Vec3X& x) {
            return radial_vector<XReal>(x, [&](XReal r) { return c * f01_bps_x(r, eps); });
          }};
}

FieldPair build_fields(const MonopoleScale& scale, FieldVariant variant) {
  const double g = scale.g(), eps = scale.eps();
  switch (variant) {
    case FieldVariant::BPS: {
      ColorScalarField higgs{
          [g, eps](const SpatialPoint& p) {
            return radial_vector(p.x(), [&](double r) { return f0_bps(r, eps) / g; });
          },
          false, [g, eps](const Vec3X& x) {
            return radial_vector<XReal>(x, [&](XReal r) { return f0_bps_x(r, eps) / g; });
          }};
      return {hedgehog_gauge_field(
                  g, [eps](double r) { return f1_bps(r, eps); }, false,
                  [eps](XReal r) { return f1_bps_x(r, eps); }),
              std::move(higgs), variant, 1.0};
    }
    case FieldVariant::WuYangPlus:
    case FieldVariant::WuYangMinus: {
      const double f = variant == FieldVariant::WuYangPlus ? 1.0 : -1.0;
      auto phase = gribov_phase_field(scale);
      phase.singular_at_origin = true;
      return {hedgehog_gauge_field(
                  g, [f](double) { return f; }, true, [f](XReal) { return XReal(f); }),
              std::move(phase), variant, 2 * kPi * eps};
    }
    case FieldVariant::PT:
      return {ColorAlgebraField::zero(), ColorScalarField::zero(), variant, 1.0};
  }
  throw DomainError("unknown field variant");
}

namespace {

// Finite-difference kernels shared by the double and extended paths. Samplers
// take raw positions; singular-point checks happen before entry.
template <typename T, typename F>
auto central(const F& f, const V3<T>& x, int axis, T h, int order) {
  auto at = [&](int k) {
    V3<T> y = x;
    y[axis] += k * h;
    return f(y);
  };
  using R = decltype(f(x));
  R out{};
  auto accumulate = [&](const R& v, T w) {
    if constexpr (std::is_same_v<R, V3<T>>) {
      for (int c = 0; c < 3; ++c) out[c] += w * v[c];
    } else {
      for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c) out[i][c] += w * v[i][c];
    }
  };
  if (order == 4) {
    accumulate(at(-2), T(1) / (12 * h));
    accumulate(at(-1), T(-8) / (12 * h));
    accumulate(at(1), T(8) / (12 * h));
    accumulate(at(2), T(-1) / (12 * h));
  } else {
    accumulate(at(-1), T(-1) / (2 * h));
    accumulate(at(1), T(1) / (2 * h));
  }
  return out;
}

template <typename T>
V3<T> cross3(const V3<T>& u, const V3<T>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

template <typename T, typename FA>
T33<T> tension_kernel(const FA& A, const V3<T>& x, T h, int order, T g) {
  std::array<T33<T>, 3> dA;  // dA[j][k][a] = d_j A_k^a
  for (int j = 0; j < 3; ++j) dA[j] = central<T>(A, x, j, h, order);
  const T33<T> a = A(x);
  T33<T> B{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e_ijk = levi_civita(i, j, k);
        if (e_ijk == 0) continue;
        const V3<T> q = cross3(a[j], a[k]);  // eps^cbd A_j^b A_k^d
        for (int c = 0; c < 3; ++c) B[i][c] += e_ijk * (dA[j][k][c] - g / 2 * q[c]);
      }
  return B;
}

template <typename T, typename FA, typename FP>
T33<T> covariant_kernel(const FA& A, const FP& phi, const V3<T>& x, T h, int order, T g) {
  const T33<T> a = A(x);
  const V3<T> p = phi(x);
  T33<T> D{};
  for (int i = 0; i < 3; ++i) {
    const V3<T> grad = central<T>(phi, x, i, h, order);
    const V3<T> rot = cross3(a[i], p);
    for (int c = 0; c < 3; ++c) D[i][c] = grad[c] - g * rot[c];
  }
  return D;
}

template <typename T, typename FA, typename FP>
V3<T> laplacian_kernel(const FA& A, const FP& phi, const V3<T>& x, T h, int order, T g) {
  auto Dphi = [&](const V3<T>& y) { return covariant_kernel<T>(A, phi, y, h, order, g); };
  const T33<T> a = A(x);
  const T33<T> d = Dphi(x);
  V3<T> out{};
  for (int i = 0; i < 3; ++i) {
    const T33<T> di = central<T>(Dphi, x, i, h, order);
    const V3<T> rot = cross3(a[i], d[i]);
    for (int c = 0; c < 3; ++c) out[c] += di[i][c] - g * rot[c];
  }
  return out;
}

Vec3X widen(const Vec3& v) { return {v[0], v[1], v[2]}; }
Vec3 narrow(const Vec3X& v) { return {double(v[0]), double(v[1]), double(v[2])}; }
Tensor3 narrow(const Tensor3X& t) {
  Tensor3 out;
  for (int i = 0; i < 3; ++i) out[i] = narrow(t[i]);
  return out;
}

auto double_sampler(const ColorAlgebraField& A) {
  return [&A](const Vec3& y) { return A(SpatialPoint(y)); };
}
auto double_sampler(const ColorScalarField& phi) {
  return [&phi](const Vec3& y) { return phi(SpatialPoint(y)); };
}

}  // namespace

Tensor3 magnetic_tension(const ColorAlgebraField& A, const SpatialPoint& x,
                         const StencilConfig& stencil, double g) {
  stencil.validate();
  if (A.singular_at_origin) require_stencil_safe(x, stencil);
  if (A.extended)
    return narrow(tension_kernel<XReal>(A.extended, widen(x.x()), stencil.h, stencil.order, g));
  return tension_kernel<double>(double_sampler(A), x.x(), stencil.h, stencil.order, g);
}

Tensor3 covariant_derivative(const ColorAlgebraField& A, const ColorScalarField& phi,
                             const SpatialPoint& x, const StencilConfig& stencil, double g) {
  stencil.validate();
  if (A.singular_at_origin || phi.singular_at_origin) require_stencil_safe(x, stencil);
  if (A.extended && phi.extended)
    return narrow(covariant_kernel<XReal>(A.extended, phi.extended, widen(x.x()), stencil.h,
                                          stencil.order, g));
  return covariant_kernel<double>(double_sampler(A), double_sampler(phi), x.x(), stencil.h,
                                  stencil.order, g);
}

Vec3 covariant_laplacian(const ColorAlgebraField& A, const ColorScalarField& phi,
                         const SpatialPoint& x, const StencilConfig& stencil, double g) {
  stencil.validate();
  if (A.singular_at_origin || phi.singular_at_origin) {
    // the nested stencil reaches twice as far
    StencilConfig wide = stencil;
    wide.h = 2 * stencil.h;
    require_stencil_safe(x, wide);
  }
  if (A.extended && phi.extended)
    return narrow(laplacian_kernel<XReal>(A.extended, phi.extended, widen(x.x()), stencil.h,
                                          stencil.order, g));
  return laplacian_kernel<double>(double_sampler(A), double_sampler(phi), x.x(), stencil.h,
                                  stencil.order, g);
}

BogomolnyiReport bogomolnyi_residual(const FieldPair& pair, std::span<const SpatialPoint> points,
                                     const StencilConfig& stencil, double g, int sign) {
  if (points.empty()) throw std::invalid_argument("bogomolnyi_residual needs at least one point");
  if (sign != 1 && sign != -1) throw std::invalid_argument("Bogomol'nyi sign must be +1 or -1");
  BogomolnyiReport rep;
  rep.exact_zero = true;
  for (const auto& x : points) {
    const Tensor3 B = magnetic_tension(pair.gauge, x, stencil, g);
    const Tensor3 D = covariant_derivative(pair.gauge, pair.scalar, x, stencil, g);
    const double nb = frobenius(B);
    const double diff = frobenius(B - (sign / pair.scalar_scale) * D);
    double rel = 0;
    if (nb == 0 && diff == 0) {
      rel = 0;
    } else {
      rep.exact_zero = false;
      rel = nb > 0 ? diff / nb : std::numeric_limits<double>::infinity();
    }
    rep.per_point.push_back(rel);
    rep.max_relative = std::max(rep.max_relative, rel);
  }
  return rep;
}

BogomolnyiReport bogomolnyi_residual(const MonopoleScale& scale,
                                     std::span<const SpatialPoint> points,
                                     const StencilConfig& stencil, int sign) {
  return bogomolnyi_residual(build_fields(scale, FieldVariant::BPS), points, stencil, scale.g(),
                             sign);
}

Vec3 gribov_residual(const MonopoleScale& scale, const SpatialPoint& x,
                     const StencilConfig& stencil) {
  const auto bps = build_fields(scale, FieldVariant::BPS);
  auto phase = gribov_phase_field(scale);
  // regular at the origin, but the stencil check still applies to the probe point
  require_stencil_safe(x, stencil);
  return covariant_laplacian(bps.gauge, phase, x, stencil, scale.g());
}

}  // namespace ymvac
