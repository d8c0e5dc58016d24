#include "ymvac/greens.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <sstream>

namespace ymvac {

std::pair<double, double> golden_roots(int n) {
  if (n < 0) throw DomainError("golden_roots: l^2 + l = n has no real roots for n < 0");
  const double s = std::sqrt(1.0 + 4.0 * n);
  return {-(1 + s) / 2, (-1 + s) / 2};
}

EulerSolution EulerSolution::make(int n, double d, double c) {
  const auto [l1, l2] = golden_roots(n);
  return {n, d, c, l1, l2};
}

EulerSolution EulerSolution::coulomb() { return make(0, -1 / (4 * kPi), 0.0); }

EulerSolution EulerSolution::golden(double c1) { return make(1, 1 / (4 * kPi), c1); }

void EulerSolution::check_invariants(double tol) const {
  std::ostringstream os;
  if (!(l1 < 0 && 0 < l2 + 1)) os << "l1 < 0 < l2 + 1 fails; ";
  if (std::abs(l1 + l2 + 1) > tol) os << "l1 + l2 = " << l1 + l2 << "; ";
  if (std::abs(l1 * l2 + n) > tol) os << "l1 l2 = " << l1 * l2 << " (n=" << n << "); ";
  if (!os.str().empty()) throw ContractError("EulerSolution: " + os.str());
}

double EulerSolution::value(double z) const { return d * std::pow(z, l1) + c * std::pow(z, l2); }

double EulerSolution::derivative(double z) const {
  return d * l1 * std::pow(z, l1 - 1) + c * l2 * std::pow(z, l2 - 1);
}

double EulerSolution::second_derivative(double z) const {
  return d * l1 * (l1 - 1) * std::pow(z, l1 - 2) + c * l2 * (l2 - 1) * std::pow(z, l2 - 2);
}

double euler_residual(const EulerSolution& sol, double z) {
  if (!(z > 0)) throw DomainError("euler_residual needs z > 0");
  const double t1 = sol.second_derivative(z);
  const double t2 = 2 * sol.derivative(z) / z;
  const double t3 = -sol.n * sol.value(z) / (z * z);
  const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
  const double res = t1 + t2 + t3;
  return scale > 0 ? res / scale : res;
}

double radial_ym_residual(const std::function<double(double)>& f,
                          const std::function<double(double)>& f_second, double r) {
  if (!(r > 0)) throw DomainError("radial_ym_residual needs r > 0");
  const double v = f(r);
  return f_second(r) + v * (v * v - 1) / (r * r);
}

double radial_ym_residual(const std::function<double(double)>& f, double r) {
  if (!(r > 0)) throw DomainError("radial_ym_residual needs r > 0");
  const double h = 1e-3 * r;
  auto second = [&f, h](double s) {
    return (-f(s + 2 * h) + 16 * f(s + h) - 30 * f(s) + 16 * f(s - h) - f(s - 2 * h)) /
           (12 * h * h);
  };
  return radial_ym_residual(f, second, r);
}

const char* to_string(FixedPoint fp) {
  switch (fp) {
    case FixedPoint::Zero: return "0";
    case FixedPoint::PlusOne: return "+1";
    case FixedPoint::MinusOne: return "-1";
    case FixedPoint::Diverged: return "diverged";
    case FixedPoint::Unclassified: return "unclassified";
  }
  return "?";
}

namespace {

struct BlowUp {
  double r;
};

}  // namespace

RadialTrajectory shoot_radial(double f0, double f0_slope, std::pair<double, double> r_span,
                              const ShootOptions& opts) {
  namespace ode = boost::numeric::odeint;
  const auto [r0, r1] = r_span;
  if (!(r0 > 0 && r1 > r0 && std::isfinite(r1)))
    throw DomainError("shoot_radial: r_span must satisfy 0 < r0 < r1 < infinity");
  if (!std::isfinite(f0) || !std::isfinite(f0_slope))
    throw DomainError("shoot_radial: initial data must be finite");

  using State = std::array<double, 2>;
  auto rhs = [](const State& s, State& ds, double r) {
    ds[0] = s[1];
    ds[1] = s[0] * (1 - s[0] * s[0]) / (r * r);
  };
  RadialTrajectory traj;
  auto observe = [&](const State& s, double r) {
    traj.r.push_back(r);
    traj.f.push_back(s[0]);
    traj.df.push_back(s[1]);
    if (!(std::abs(s[0]) <= opts.blowup)) throw BlowUp{r};
  };
  State s{f0, f0_slope};
  auto stepper = ode::make_controlled(opts.abs_tol, opts.rel_tol, ode::runge_kutta_dopri5<State>());
  try {
    ode::integrate_adaptive(stepper, rhs, s, r0, r1, 1e-3 * r0, observe);
  } catch (const BlowUp& b) {
    traj.classification = FixedPoint::Diverged;
    traj.blowup_radius = b.r;
    traj.terminal_distance = std::numeric_limits<double>::infinity();
    return traj;
  }
  const double end = traj.f.back();
  const std::array<std::pair<double, FixedPoint>, 3> fixed{
      {{0.0, FixedPoint::Zero}, {1.0, FixedPoint::PlusOne}, {-1.0, FixedPoint::MinusOne}}};
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [value, label] : fixed) {
    const double dist = std::abs(end - value);
    if (dist < best) {
      best = dist;
      traj.classification = label;
    }
  }
  traj.terminal_distance = best;
  if (best > opts.capture) traj.classification = FixedPoint::Unclassified;
  return traj;
}

GreenTensor::GreenTensor(EulerSolution sol0, EulerSolution sol1)
    : sol0_(std::move(sol0)), sol1_(std::move(sol1)) {}

namespace {

Eigen::Vector3d unit(const Vec3& v) {
  const double r = norm(v);
  return Eigen::Vector3d(v[0], v[1], v[2]) / r;
}

ColorMatrix transverse(const Eigen::Vector3d& n) {
  return ColorMatrix::Identity() - n * n.transpose();
}

}  // namespace

ColorMatrix GreenTensor::evaluate(const SpatialPoint& x, const SpatialPoint& y) const {
  if (x.r() == 0 || y.r() == 0) throw DomainError("GreenTensor: x or y at the origin");
  const double z = norm(x.x() - y.x());
  if (z == 0) throw DomainError("GreenTensor: coincident points");
  const Eigen::Vector3d nx = unit(x.x()), ny = unit(y.x());
  return nx * ny.transpose() * sol0_.value(z) + transverse(nx) * transverse(ny) * sol1_.value(z);
}

ColorMatrix GreenTensor::evaluate_centered(const SpatialPoint& x, const Vec3& y_dir) const {
  if (x.r() == 0) throw DomainError("GreenTensor: x at the origin");
  if (norm(y_dir) == 0) throw DomainError("GreenTensor: zero source direction");
  const double z = x.r();
  const Eigen::Vector3d nx = unit(x.x()), ny = unit(y_dir);
  return nx * ny.transpose() * sol0_.value(z) + transverse(nx) * transverse(ny) * sol1_.value(z);
}

GreenTensor green_tensor(const EulerSolution& sol0, const EulerSolution& sol1) {
  if (sol0.n != 0 || sol1.n != 1)
    throw ContractError("green_tensor needs sol0 with n = 0 and sol1 with n = 1");
  sol0.check_invariants();
  sol1.check_invariants();
  return GreenTensor(sol0, sol1);
}

ColorMatrix monopole_operator(const std::function<ColorMatrix(const SpatialPoint&)>& G,
                              const SpatialPoint& x, double h) {
  if (!(h > 0)) throw DomainError("monopole_operator: step must be positive");
  if (x.r() < 10 * h) throw StencilError("monopole_operator: stencil reaches the origin");
  const ColorMatrix g0 = G(x);
  std::array<ColorMatrix, 3> d1;
  ColorMatrix lap = ColorMatrix::Zero();
  for (int i = 0; i < 3; ++i) {
    const ColorMatrix p1 = G(x.shifted(i, h)), m1 = G(x.shifted(i, -h));
    const ColorMatrix p2 = G(x.shifted(i, 2 * h)), m2 = G(x.shifted(i, -2 * h));
    d1[i] = (8 * (p1 - m1) - (p2 - m2)) / (12 * h);
    lap += (-p2 + 16 * p1 - 30 * g0 + 16 * m1 - m2) / (12 * h * h);
  }
  const double r = x.r();
  const Eigen::Vector3d n = unit(x.x());
  ColorMatrix out = lap - (n * n.transpose() + ColorMatrix::Identity()) * g0 / (r * r);
  // 2 (n^a/r d^c - n^c/r d^a) acting on G^{cb}
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double s = 0;
      for (int c = 0; c < 3; ++c) s += n[a] * d1[c](c, b) - n[c] * d1[a](c, b);
      out(a, b) += 2 * s / r;
    }
  return out;
}

double green_operator_residual(const GreenTensor& G, const SpatialPoint& x, const Vec3& y_dir,
                               double h) {
  return monopole_operator([&](const SpatialPoint& p) { return G.evaluate_centered(p, y_dir); },
                           x, h)
      .cwiseAbs()
      .maxCoeff();
}

double green_operator_residual_offcentre(const GreenTensor& G, const SpatialPoint& x,
                                         const SpatialPoint& y, double h) {
  return monopole_operator([&](const SpatialPoint& p) { return G.evaluate(p, y); }, x, h)
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace ymvac
