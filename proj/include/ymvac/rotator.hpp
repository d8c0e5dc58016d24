#pragma once

#include <complex>
#include <vector>

#include "ymvac/bps_profiles.hpp"

namespace ymvac {

using cplx = std::complex<double>;

/// Free topological rotator. Only Euclidean time t = -i tau_E (tau_E > 0) is
/// accepted; there both Green-function sums converge absolutely.
struct RotatorParams {
  double inertia = 1.0;  // I
  double theta = 0.0;    // normalized into [0, 2 pi) by validated()
  cplx time{0, -1};      // t = -i tau_E
  double dN = 0.0;       // N_out - N_in

  static RotatorParams euclidean(double inertia, double theta, double tau_e, double dN = 0.0);
  /// Throws DomainError for inertia <= 0 or a time that is not negative imaginary.
  RotatorParams validated() const;
  double tau_e() const { return -time.imag(); }
  /// True if theta lies in the window [0, pi] quoted for the spectrum.
  bool theta_in_quoted_window() const;
};

/// theta mod 2 pi in [0, 2 pi).
double normalize_theta(double theta);

/// {2 pi k + theta : k_lo <= k <= k_hi}.
std::vector<double> bloch_spectrum(double theta, int k_lo, int k_hi);

/// Weight e^{-i n theta} (survival at p = 2 pi k + theta) or the printed
/// e^{+i n theta} (survival at p = 2 pi k - theta).
enum class PhaseConvention { Spectrum, AsPrinted };

/// (1/(2L+1)) sum_{n=-L}^{L} w_n e^{i p n}, w_n the measure weight above.
cplx averaged_wavefunction(double p, double theta, int L,
                           PhaseConvention conv = PhaseConvention::Spectrum);

/// 1/((2L+1) |sin(Delta/2)|), Delta the distance from p to the nearest
/// surviving momentum. Infinite on the spectrum.
double interference_bound(double p, double theta, int L,
                          PhaseConvention conv = PhaseConvention::Spectrum);

struct ThetaArgs {
  cplx Z;
  cplx tau;
};

/// Theta_3(Z|tau) = sum_k exp(i pi k^2 tau + 2 i k Z), symmetric truncation
/// |k| <= k_max. k_max = 0 picks the smallest cut whose first omitted terms are
/// below 1e-17 of the largest term. Throws DomainError for Im tau <= 0.
cplx theta3(const ThetaArgs& args, int k_max = 0);

/// |Theta_3(Z|tau) - (-i tau)^{-1/2} exp(Z^2/(i pi tau)) Theta_3(Z/tau | -1/tau)|.
double theta_modular_defect(const ThetaArgs& args);

/// (1/2 pi) sum_k exp(-p_k^2 tau_E/(2I) + i p_k dN), p_k = 2 pi k + theta.
/// k_max = 0 selects the cut automatically.
cplx spectral_green(const RotatorParams& params, int k_max = 0);

/// The same sum written as a theta function:
/// (1/2 pi) exp(-theta^2 tau_E/(2I) + i theta dN) Theta_3(pi dN + i pi theta tau_E/I | 2 pi i tau_E/I).
cplx spectral_green_theta(const RotatorParams& params);

/// Winding sum (1/2 pi) sqrt(I/(2 pi tau_E)) sum_n e^{-i theta n} exp(-(dN + n)^2 I/(2 tau_E)),
/// the Poisson dual of spectral_green. n_max = 0 selects the cut automatically.
cplx path_green(const RotatorParams& params, int n_max = 0);

/// Individual winding terms for n in [n_lo, n_hi] (same normalization).
std::vector<cplx> path_green_terms(const RotatorParams& params, int n_lo, int n_hi);

/// |2 pi k + theta| alpha_s/(pi^2 eps): electric tension in units of the
/// magnetic monopole profile.
double electric_spectrum(int k, double theta, const MonopoleScale& scale);

/// Abelian analogue: e (theta/(2 pi) + k).
double abelian_electric_field(int k, double theta, double e);

}  // namespace ymvac
