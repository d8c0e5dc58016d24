#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "ymvac/common.hpp"

namespace ymvac {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n).
GaussRule gauss_legendre(int n);

enum class QuadratureRule { GaussLegendre, Trapezoid };

/// Spherical product rule over the ball r < r_max. The radius is compactified
/// as r = eps tan(pi u / 2), so r_max may be +infinity.
struct QuadratureSpec {
  double r_max = std::numeric_limits<double>::infinity();
  int n_r = 64;
  int n_theta = 16;
  int n_phi = 16;
  QuadratureRule rule = QuadratureRule::GaussLegendre;

  void validate(double eps) const;
  QuadratureSpec refined() const;
  bool unbounded() const { return std::isinf(r_max); }
};

struct RadialNode {
  double r;
  double weight;  // includes dr/du, excludes r^2
};

/// Radial nodes on [r_min, r_max] under the tangent map with length scale eps.
std::vector<RadialNode> radial_nodes(const QuadratureSpec& spec, double eps, double r_min = 0.0);

struct SphericalNode {
  SpatialPoint point;
  double weight;  // full d^3x weight
  int radial_index;
};

std::vector<SphericalNode> spherical_nodes(const QuadratureSpec& spec, double eps,
                                           double r_min = 0.0);

/// Integral of f over the ball (or shell from r_min), compensated sum.
double integrate_ball(const QuadratureSpec& spec, double eps,
                      const std::function<double(const SpatialPoint&)>& f, double r_min = 0.0);

/// Nodes on the sphere of radius R with surface weights (R^2 dOmega).
std::vector<SphericalNode> sphere_nodes(const QuadratureSpec& spec, double radius);

}  // namespace ymvac
