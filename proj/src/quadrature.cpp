#include "ymvac/quadrature.hpp"

#include <sstream>

namespace ymvac {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  // P_n(x) and P_n'(x) by the three-term recurrence
  auto legendre = [n](double x, double& p, double& dp) {
    double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    p = n == 1 ? x : p1;
    dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1);
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p = 0, dp = 1;
    for (int it = 0; it < 100; ++it) {
      legendre(x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre(x, p, dp);
    const double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = w;
  }
  return rule;
}

void QuadratureSpec::validate(double eps) const {
  std::ostringstream os;
  if (!(r_max >= 50 * eps)) {
    os << "quadrature r_max=" << r_max << " must be at least 50 eps (" << 50 * eps << ")";
    throw DomainError(os.str());
  }
  if (n_r < 16 || n_theta < 16 || n_phi < 16)
    throw DomainError("quadrature node counts must be at least 16");
}

QuadratureSpec QuadratureSpec::refined() const {
  QuadratureSpec q = *this;
  q.n_r *= 2;
  q.n_theta *= 2;
  q.n_phi *= 2;
  return q;
}

namespace {

// Nodes and weights on [0, 1] for the selected rule.
void unit_rule(int n, QuadratureRule rule, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  if (rule == QuadratureRule::GaussLegendre) {
    const GaussRule g = gauss_legendre(n);
    for (int i = 0; i < n; ++i) {
      x[i] = 0.5 * (g.nodes[i] + 1);
      w[i] = 0.5 * g.weights[i];
    }
  } else {
    // open midpoint-trapezoid so the endpoints (r = infinity, poles) are never sampled
    for (int i = 0; i < n; ++i) {
      x[i] = (i + 0.5) / n;
      w[i] = 1.0 / n;
    }
  }
}

}  // namespace

std::vector<RadialNode> radial_nodes(const QuadratureSpec& spec, double eps, double r_min) {
  const double u_lo = 2 / kPi * std::atan(r_min / eps);
  const double u_hi = spec.unbounded() ? 1.0 : 2 / kPi * std::atan(spec.r_max / eps);
  std::vector<double> x, w;
  unit_rule(spec.n_r, spec.rule, x, w);
  std::vector<RadialNode> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double u = u_lo + (u_hi - u_lo) * x[i];
    const double c = std::cos(kPi * u / 2);
    const double r = eps * std::tan(kPi * u / 2);
    const double drdu = eps * kPi / 2 / (c * c);
    out.push_back({r, w[i] * (u_hi - u_lo) * drdu});
  }
  return out;
}

std::vector<SphericalNode> spherical_nodes(const QuadratureSpec& spec, double eps, double r_min) {
  const auto radial = radial_nodes(spec, eps, r_min);
  std::vector<double> ct, wt;
  unit_rule(spec.n_theta, spec.rule, ct, wt);
  std::vector<SphericalNode> out;
  out.reserve(radial.size() * spec.n_theta * spec.n_phi);
  const double dphi = 2 * kPi / spec.n_phi;
  for (std::size_t ir = 0; ir < radial.size(); ++ir) {
    const auto& rn = radial[ir];
    for (int it = 0; it < spec.n_theta; ++it) {
      const double cos_t = 2 * ct[it] - 1;
      const double sin_t = std::sqrt(std::max(0.0, 1 - cos_t * cos_t));
      for (int ip = 0; ip < spec.n_phi; ++ip) {
        const double phi = (ip + 0.5) * dphi;
        const Vec3 x{rn.r * sin_t * std::cos(phi), rn.r * sin_t * std::sin(phi), rn.r * cos_t};
        out.push_back({SpatialPoint(x), rn.weight * rn.r * rn.r * 2 * wt[it] * dphi,
                       static_cast<int>(ir)});
      }
    }
  }
  return out;
}

double integrate_ball(const QuadratureSpec& spec, double eps,
                      const std::function<double(const SpatialPoint&)>& f, double r_min) {
  CompensatedSum<> acc;
  for (const auto& node : spherical_nodes(spec, eps, r_min)) acc += node.weight * f(node.point);
  return acc.value();
}

std::vector<SphericalNode> sphere_nodes(const QuadratureSpec& spec, double radius) {
  std::vector<double> ct, wt;
  unit_rule(spec.n_theta, spec.rule, ct, wt);
  std::vector<SphericalNode> out;
  const double dphi = 2 * kPi / spec.n_phi;
  for (int it = 0; it < spec.n_theta; ++it) {
    const double cos_t = 2 * ct[it] - 1;
    const double sin_t = std::sqrt(std::max(0.0, 1 - cos_t * cos_t));
    for (int ip = 0; ip < spec.n_phi; ++ip) {
      const double phi = (ip + 0.5) * dphi;
      const Vec3 x{radius * sin_t * std::cos(phi), radius * sin_t * std::sin(phi), radius * cos_t};
      out.push_back({SpatialPoint(x), radius * radius * 2 * wt[it] * dphi, 0});
    }
  }
  return out;
}

}  // namespace ymvac
