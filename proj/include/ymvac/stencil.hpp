#pragma once

#include <array>
#include <span>
#include <sstream>

#include "ymvac/common.hpp"

namespace ymvac {

/// Central finite-difference configuration. Step h in GeV^-1.
struct StencilConfig {
  double h = 5e-3;
  int order = 4;

  /// Default for a BPS size eps: 4th order, h = eps/200.
  static StencilConfig for_scale(double eps, int order = 4) { return {eps / 200.0, order}; }

  void validate() const {
    if (!(h > 0)) throw DomainError("stencil step must be positive");
    if (order != 2 && order != 4) throw DomainError("stencil order must be 2 or 4");
  }
  /// Furthest offset reached by the first-derivative stencil.
  double reach() const { return order == 4 ? 2 * h : h; }
};

namespace detail {
struct Tap {
  int offset;
  double weight;
};
inline constexpr std::array<Tap, 2> kCentral2{{{-1, -0.5}, {1, 0.5}}};
inline constexpr std::array<Tap, 4> kCentral4{
    {{-2, 1.0 / 12}, {-1, -8.0 / 12}, {1, 8.0 / 12}, {2, -1.0 / 12}}};
}  // namespace detail

/// d f / d x_axis at p by central differences. f must return a type closed
/// under + and scalar *.
template <typename F>
auto partial(const F& f, const SpatialPoint& p, int axis, const StencilConfig& st) {
  auto apply = [&](auto taps) {
    auto acc = (taps[0].weight / st.h) * f(p.shifted(axis, taps[0].offset * st.h));
    for (std::size_t k = 1; k < taps.size(); ++k)
      acc = acc + (taps[k].weight / st.h) * f(p.shifted(axis, taps[k].offset * st.h));
    return acc;
  };
  if (st.order == 4) return apply(std::span(detail::kCentral4));
  return apply(std::span(detail::kCentral2));
}

/// Throws StencilError if p is within 10 h of the singular radius r = 0.
inline void require_stencil_safe(const SpatialPoint& p, const StencilConfig& st,
                                 double margin_factor = 10.0) {
  if (p.r() < margin_factor * st.h) {
    std::ostringstream os;
    os << "point at r=" << p.r() << " is within " << margin_factor << "h (h=" << st.h
       << ") of the singular radius";
    throw StencilError(os.str());
  }
}

}  // namespace ymvac
