#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ymvac/common.hpp"

namespace ymvac {

/// Platform-stable uniform draws. std::mt19937_64 output is fixed by the
/// standard; the distributions are not, so the mapping to [0, 1) is done here.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform direction on the unit sphere.
  Vec3 direction() {
    const double z = uniform(-1, 1), phi = uniform(0, 2 * kPi);
    const double s = std::sqrt(1 - z * z);
    return {s * std::cos(phi), s * std::sin(phi), z};
  }

 private:
  std::mt19937_64 engine_;
};

/// n points with radii evenly spaced over [r_min, r_max] and random directions.
inline std::vector<SpatialPoint> radial_sweep(Sampler& s, int n, double r_min, double r_max) {
  std::vector<SpatialPoint> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double r = n == 1 ? r_min : r_min + (r_max - r_min) * i / (n - 1);
    out.emplace_back(r * s.direction());
  }
  return out;
}

}  // namespace ymvac
