#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ymvac/bps_profiles.hpp"
#include "ymvac/quadrature.hpp"

namespace ymvac {

/// A quantity carrying the power P of GeV. Products and quotients track the
/// power; sums of different powers do not compile.
template <int P>
struct GeV {
  double value = 0;

  constexpr GeV() = default;
  constexpr explicit GeV(double v) : value(v) {}

  constexpr GeV operator+(GeV o) const { return GeV(value + o.value); }
  constexpr GeV operator-(GeV o) const { return GeV(value - o.value); }
  constexpr GeV operator-() const { return GeV(-value); }
  constexpr bool operator==(const GeV&) const = default;
  constexpr auto operator<=>(const GeV&) const = default;
};

template <int P, int Q>
constexpr GeV<P + Q> operator*(GeV<P> a, GeV<Q> b) {
  return GeV<P + Q>(a.value * b.value);
}
template <int P, int Q>
constexpr GeV<P - Q> operator/(GeV<P> a, GeV<Q> b) {
  return GeV<P - Q>(a.value / b.value);
}
template <int P>
constexpr GeV<P> operator*(double s, GeV<P> a) {
  return GeV<P>(s * a.value);
}
template <int P>
constexpr GeV<P> operator*(GeV<P> a, double s) {
  return GeV<P>(s * a.value);
}
template <int P>
constexpr GeV<P> operator/(GeV<P> a, double s) {
  return GeV<P>(a.value / s);
}
template <int P>
constexpr GeV<-P> operator/(double s, GeV<P> a) {
  return GeV<-P>(s / a.value);
}

/// Physical inputs. The defaults are the calibration used throughout:
/// F_pi = 0.1 GeV, N_f = 3, dm_eta^2 = 0.87 GeV^2, alpha_s = 0.24.
struct PhenoInputs {
  int n_f = 3;
  int n_c = 3;
  GeV<1> f_pi{0.1};
  GeV<1> lambda_uv{0.110};
  GeV<1> v0_cuberoot{0.234};
  double alpha_s = 0.24;
  GeV<2> dm_eta2{0.87};
  GeV<-3> volume{1000.0};

  /// Throws DomainError unless every field is positive and n_f, n_c >= 1.
  void validate() const;
};

/// 4 pi/(g^2 eps) = 1/(alpha_s eps): magnetic energy V<B^2> of the vacuum.
GeV<1> magnetic_energy(const MonopoleScale& scale);

struct EnergyQuadrature {
  double value = 0;        // quadrature of |B|^2 over eps < r < r_max
  double closed_form = 0;  // 4 pi/(g^2 eps)
  double truncated = 0;    // 4 pi/(g^2 eps) (1 - eps/r_max), the exact shell value
};

/// Integrates |B|^2 of the f = +1 Wu-Yang field, B computed by finite
/// differences, over the shell eps < r < r_max with the given angular and
/// radial node counts (quad.r_max is the outer radius).
EnergyQuadrature magnetic_energy_quadrature(const MonopoleScale& scale, const QuadratureSpec& quad);

enum class InertiaMethod { Formula, Quadrature };

/// I = 4 pi^2 eps/alpha_s, or the quadrature of |D Phi_0|^2 over all space.
/// The quadrature path throws ConsistencyError if it departs from the formula
/// by more than 5%.
GeV<-1> rotary_momentum(const MonopoleScale& scale, InertiaMethod method,
                        const QuadratureSpec& quad = {});

/// (4 pi^2/alpha_s^2)/(V<B^2>).
GeV<-1> rotary_momentum_from_energy(double alpha_s, GeV<1> magnetic_energy);

/// (2 pi/(g^2 eps)) [P^2 (g^2/(8 pi^2))^2 + 1].
GeV<1> vacuum_hamiltonian(double p_n, const MonopoleScale& scale);

/// 4 pi m a/g: the Bogomol'nyi lower bound on the monopole energy.
double bogomolnyi_energy_bound(double m, double a, double g);

struct NormalizationResult {
  double value = 0;          // (g^2/8 pi^2) int D Phi_0 . B
  double tail_fraction = 0;  // share of the integral from r > 10 eps
};

/// Throws ConsistencyError if the value departs from 1 by more than 5%.
NormalizationResult normalization_check(const MonopoleScale& scale, const QuadratureSpec& quad);

struct SchwingerResult {
  double value = 0;        // C_M^2/(I V) with I V = (2 pi/e)^2
  double closed_form = 0;  // e^2/pi
  double relative_defect = 0;
  bool consistent = false;  // relative_defect <= 1e-14
};

inline const double kSchwingerC = 2 * std::sqrt(kPi);

SchwingerResult schwinger_mass(double e, double c_m = kSchwingerC);

/// N_f^2 alpha_s^2 b2/(F_pi^2 2 pi^3).
GeV<2> eta_mass_shift(const PhenoInputs& in, GeV<4> b2);
/// C_eta = N_f sqrt(2/pi)/F_pi, from equating the two mass formulas.
GeV<-1> eta_constant(const PhenoInputs& in);

/// 2 pi^3 F_pi^2 dm_eta^2/(N_f^2 alpha_s^2).
GeV<4> b2_estimate(const PhenoInputs& in);
/// alpha_s^2 b2_estimate: the alpha_s-independent numerator.
GeV<4> b2_numerator(const PhenoInputs& in);

inline constexpr double kBeta0 = 11.0 / (4 * kPi);

/// 1/(beta [1 + 2 ln(4 (N_c V0)^(1/3)/Lambda)]). Throws DomainError if the log
/// argument is <= 1.
double alpha_mod_zero(const PhenoInputs& in);
/// Same with the argument read as 4 N_c V0^(1/3)/Lambda (reported for comparison).
double alpha_mod_zero_literal(const PhenoInputs& in);

/// sqrt(omega^2 - k^2); DomainError for omega < k.
double gluon_structural_mass(double omega, double k);
/// Asymptotic branches in rescaled units: 2/k^2 for k < k_lo, k for k > k_hi,
/// nothing in between.
std::optional<double> omega_asymptotic(double k, double k_lo = 0.5, double k_hi = 5.0);

struct VacuumQuantities {
  GeV<4> b2;
  GeV<1> magnetic_energy;
  GeV<-1> inertia;
  std::function<GeV<1>(double)> hamiltonian_at;
};

VacuumQuantities vacuum_quantities(const MonopoleScale& scale, GeV<-3> volume);

}  // namespace ymvac
