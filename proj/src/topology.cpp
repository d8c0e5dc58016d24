#include "ymvac/topology.hpp"

#include <sstream>

namespace ymvac {

namespace {

constexpr cplx kI{0, 1};

MatrixTriple add(const MatrixTriple& a, const MatrixTriple& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

MatrixTriple scale(double s, const MatrixTriple& a) { return {s * a[0], s * a[1], s * a[2]}; }

// Central differences of matrix-valued maps along one axis with step h.
Mat2 d_matrix(const std::function<Mat2(const SpatialPoint&)>& f, const SpatialPoint& p, int axis,
              double h, int order) {
  if (order == 2) return (f(p.shifted(axis, h)) - f(p.shifted(axis, -h))) / (2 * h);
  return (8.0 * (f(p.shifted(axis, h)) - f(p.shifted(axis, -h))) -
          (f(p.shifted(axis, 2 * h)) - f(p.shifted(axis, -2 * h)))) /
         (12 * h);
}

MatrixTriple d_triple(const std::function<MatrixTriple(const SpatialPoint&)>& f,
                      const SpatialPoint& p, int axis, double h, int order) {
  if (order == 2) {
    return scale(1 / (2 * h), add(f(p.shifted(axis, h)), scale(-1, f(p.shifted(axis, -h)))));
  }
  const MatrixTriple near = add(f(p.shifted(axis, h)), scale(-1, f(p.shifted(axis, -h))));
  const MatrixTriple far = add(f(p.shifted(axis, 2 * h)), scale(-1, f(p.shifted(axis, -2 * h))));
  return scale(1 / (12 * h), add(scale(8, near), scale(-1, far)));
}

double eps_trace_triple(const MatrixTriple& X, const MatrixTriple& Y, const MatrixTriple& Z) {
  cplx s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = levi_civita(i, j, k);
        if (e != 0) s += double(e) * (X[i] * Y[j] * Z[k]).trace();
      }
  return s.real();
}

}  // namespace

void RadialProfile::check_boundary_conditions() const {
  const double at0 = value(0.0);
  const double far = value(1e3 * scale);
  if (std::abs(at0) > 1e-12 || std::abs(far - 1) > 1e-2) {
    std::ostringstream os;
    os << "profile '" << name << "' violates f(0)=0, f(inf)=1: f(0)=" << at0
       << ", f(1e3 scale)=" << far;
    throw ContractError(os.str());
  }
}

RadialProfile bps_phase_profile(double eps) {
  return {[eps](double r) { return f01_bps(r, eps); },
          [eps](double r) { return f01_bps_prime(r, eps); }, eps, "f01_bps"};
}

GroupElement gribov_factor(int n, const SpatialPoint& x, const RadialProfile& profile) {
  profile.check_boundary_conditions();
  if (n == 0 || x.r() == 0) return GroupElement::identity();
  const double beta = kPi * n * profile.value(x.r());
  Mat2 m = std::cos(beta) * Mat2::Identity() - kI * std::sin(beta) * pauli_dot(x.n_hat());
  return GroupElement(m);
}

MatrixTriple gribov_factor_gradient(int n, const SpatialPoint& x, const RadialProfile& profile) {
  MatrixTriple dv;
  const double r = x.r();
  const double dbeta = kPi * n * profile.derivative(r);
  if (r == 0) {
    // v ~ 1 - i beta'(0) tau.x
    const auto& t = pauli();
    for (int i = 0; i < 3; ++i) dv[i] = -kI * dbeta * t[i];
    return dv;
  }
  const double beta = kPi * n * profile.value(r);
  const double c = std::cos(beta), s = std::sin(beta);
  const Vec3 nh = x.n_hat();
  const Mat2 T = pauli_dot(nh);
  for (int i = 0; i < 3; ++i) {
    Vec3 e{0, 0, 0};
    e[i] = 1;
    const Mat2 dT = pauli_dot((1 / r) * (e - nh[i] * nh));
    dv[i] = -s * dbeta * nh[i] * Mat2::Identity() - kI * (c * dbeta * nh[i] * T + s * dT);
  }
  return dv;
}

MatrixTriple pure_gauge(int n, const SpatialPoint& x, const RadialProfile& profile,
                        DerivativeMethod method, const StencilConfig& stencil) {
  const Mat2 vinv = gribov_factor(n, x, profile).inverse().matrix();
  MatrixTriple dv;
  if (method == DerivativeMethod::Analytic) {
    dv = gribov_factor_gradient(n, x, profile);
  } else {
    stencil.validate();
    auto v = [&](const SpatialPoint& p) { return gribov_factor(n, p, profile).matrix(); };
    const double h = stencil.h * std::max(1.0, x.r() / profile.scale);
    for (int i = 0; i < 3; ++i) dv[i] = d_matrix(v, x, i, h, stencil.order);
  }
  return {dv[0] * vinv, dv[1] * vinv, dv[2] * vinv};
}

double degree_density(const MatrixTriple& L) {
  return -eps_trace_triple(L, L, L) / (24 * kPi * kPi);
}

namespace {

double degree_integral(int n, const QuadratureSpec& quad, const RadialProfile& profile,
                       DerivativeMethod method) {
  const StencilConfig st = StencilConfig::for_scale(profile.scale);
  return integrate_ball(quad, profile.scale, [&](const SpatialPoint& p) {
    return degree_density(pure_gauge(n, p, profile, method, st));
  });
}

}  // namespace

DegreeResult map_degree(int n, const QuadratureSpec& quad, const RadialProfile& profile,
                        DerivativeMethod method) {
  quad.validate(profile.scale);
  profile.check_boundary_conditions();
  DegreeResult res;
  if (n == 0) return res;
  res.value = degree_integral(n, quad, profile, method);
  res.refined = degree_integral(n, quad.refined(), profile, method);
  res.resolution_gap = std::abs(res.refined - res.value);
  if (res.resolution_gap > 1e-2) {
    std::ostringstream os;
    os << "map_degree(" << n << ") under-resolved: " << res.value << " vs refined " << res.refined;
    throw ResolutionError(os.str());
  }
  return res;
}

double degree_radial_oracle(int n, const RadialProfile& profile, double r_max) {
  auto primitive = [](double beta) { return (beta - std::sin(beta) * std::cos(beta)) / kPi; };
  const double f_out = std::isinf(r_max) ? 1.0 : profile.value(r_max);
  return primitive(kPi * n * f_out) - primitive(kPi * n * profile.value(0.0));
}

MatrixTriple to_matrix_potential(const Tensor3& A, double g) {
  return {color_to_matrix({A[0][0], A[0][1], A[0][2]}, g),
          color_to_matrix({A[1][0], A[1][1], A[1][2]}, g),
          color_to_matrix({A[2][0], A[2][1], A[2][2]}, g)};
}

Tensor3 from_matrix_potential(const MatrixTriple& A_hat, double g) {
  Tensor3 A;
  for (int i = 0; i < 3; ++i) {
    const Vec3 c = matrix_to_color(A_hat[i], g);
    A[i] = {c[0], c[1], c[2]};
  }
  return A;
}

WindingReport winding_functional(const ColorAlgebraField& A, const QuadratureSpec& quad, double g,
                                 double eps, const StencilConfig& stencil) {
  quad.validate(eps);
  stencil.validate();
  auto A_hat = [&](const SpatialPoint& p) { return to_matrix_potential(A(p), g); };
  const auto nodes = spherical_nodes(quad, eps);
  const int outer = quad.n_r - 1;
  CompensatedSum<> total, tail;
  for (const auto& node : nodes) {
    const SpatialPoint& p = node.point;
    if (A.singular_at_origin) require_stencil_safe(p, stencil);
    const double h = stencil.h * std::max(1.0, p.r() / eps);
    const MatrixTriple a = A_hat(p);
    std::array<MatrixTriple, 3> da;  // da[j][k] = d_j A_hat_k
    for (int j = 0; j < 3; ++j) da[j] = d_triple(A_hat, p, j, h, stencil.order);
    cplx s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const int e = levi_civita(i, j, k);
          if (e == 0) continue;
          s += double(e) * (a[i] * da[j][k] - (2.0 / 3) * a[i] * a[j] * a[k]).trace();
        }
    const double contribution = -node.weight * s.real() / (8 * kPi * kPi);
    total += contribution;
    if (node.radial_index == outer) tail += contribution;
  }
  WindingReport rep;
  rep.value = total.value();
  rep.tail = tail.value();
  rep.tail_ok = std::abs(rep.tail) < 1e-3 * std::max(1.0, std::abs(rep.value));
  return rep;
}

ColorAlgebraField gauge_transform(const ColorAlgebraField& A, GroupField v, GroupGradient dv,
                                  double g) {
  return {[A, v = std::move(v), dv = std::move(dv), g](const SpatialPoint& p) {
            const MatrixTriple a = to_matrix_potential(A(p), g);
            const Mat2 V = v(p).matrix();
            const Mat2 Vinv = V.adjoint();
            const MatrixTriple dV = dv(p);
            MatrixTriple out;
            for (int i = 0; i < 3; ++i) out[i] = V * a[i] * Vinv + dV[i] * Vinv;
            return from_matrix_potential(out, g);
          },
          A.singular_at_origin, {}};
}

ColorAlgebraField gauge_transform(const ColorAlgebraField& A, GroupField v, double g,
                                  const StencilConfig& stencil) {
  stencil.validate();
  GroupGradient dv = [v, stencil](const SpatialPoint& p) {
    std::function<Mat2(const SpatialPoint&)> m = [&v](const SpatialPoint& q) {
      return v(q).matrix();
    };
    MatrixTriple out;
    for (int i = 0; i < 3; ++i) out[i] = d_matrix(m, p, i, stencil.h, stencil.order);
    return out;
  };
  return gauge_transform(A, v, std::move(dv), g);
}

ColorAlgebraField gauge_transform(const ColorAlgebraField& A, int n, const RadialProfile& profile,
                                  double g) {
  profile.check_boundary_conditions();
  return gauge_transform(
      A, [n, profile](const SpatialPoint& p) { return gribov_factor(n, p, profile); },
      [n, profile](const SpatialPoint& p) { return gribov_factor_gradient(n, p, profile); }, g);
}

double winding_surface_term(const ColorAlgebraField& A, int n, const RadialProfile& profile,
                            const QuadratureSpec& quad, double g) {
  if (quad.unbounded()) return 0.0;
  CompensatedSum<> acc;
  for (const auto& node : sphere_nodes(quad, quad.r_max)) {
    const SpatialPoint& p = node.point;
    const Mat2 V = gribov_factor(n, p, profile).matrix();
    const MatrixTriple a = to_matrix_potential(A(p), g);
    const MatrixTriple L = pure_gauge(n, p, profile);
    const Vec3 nh = p.n_hat();
    cplx s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const int e = levi_civita(i, j, k);
          if (e != 0) s += double(e) * nh[i] * (V * a[j] * V.adjoint() * L[k]).trace();
        }
    acc += node.weight * s.real();
  }
  return -acc.value() / (8 * kPi * kPi);
}

double instanton_amplitude(int n_out, int n_in, double g) {
  if (!(g > 0)) throw DomainError("coupling g must be positive");
  return std::exp(-8 * kPi * kPi * (n_out - n_in) / (g * g));
}

}  // namespace ymvac
