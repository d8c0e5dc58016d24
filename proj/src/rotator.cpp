#include "ymvac/rotator.hpp"

#include <sstream>

namespace ymvac {

namespace {

constexpr cplx kI{0, 1};
// e^{-40} ~ 4e-18: terms below this fraction of the largest are dropped
constexpr double kLogCut = 40.0;
constexpr int kMaxTerms = 1'000'000;

int checked_cut(double k) {
  if (!(k < kMaxTerms)) throw DomainError("series cut exceeds 1e6 terms");
  return static_cast<int>(std::ceil(k));
}

}  // namespace

RotatorParams RotatorParams::euclidean(double inertia, double theta, double tau_e, double dN) {
  return RotatorParams{inertia, theta, cplx(0, -tau_e), dN}.validated();
}

RotatorParams RotatorParams::validated() const {
  if (!(inertia > 0)) throw DomainError("rotator inertia must be positive");
  if (time.real() != 0 || !(time.imag() < 0)) {
    std::ostringstream os;
    os << "rotator time " << time.real() << (time.imag() < 0 ? "" : "+") << time.imag()
       << "i is not Euclidean (t = -i tau_E, tau_E > 0); the sums do not converge";
    throw DomainError(os.str());
  }
  if (!std::isfinite(theta) || !std::isfinite(dN)) throw DomainError("theta and dN must be finite");
  RotatorParams p = *this;
  p.theta = normalize_theta(theta);
  return p;
}

bool RotatorParams::theta_in_quoted_window() const {
  const double t = normalize_theta(theta);
  return t >= 0 && t <= kPi;
}

double normalize_theta(double theta) {
  double t = std::fmod(theta, 2 * kPi);
  if (t < 0) t += 2 * kPi;
  if (t >= 2 * kPi) t = 0;
  return t;
}

std::vector<double> bloch_spectrum(double theta, int k_lo, int k_hi) {
  std::vector<double> out;
  for (int k = k_lo; k <= k_hi; ++k) out.push_back(2 * kPi * k + theta);
  return out;
}

cplx averaged_wavefunction(double p, double theta, int L, PhaseConvention conv) {
  if (L < 1) throw DomainError("averaged_wavefunction needs L >= 1");
  const double phi = conv == PhaseConvention::Spectrum ? p - theta : p + theta;
  CompensatedSum<cplx> acc;
  for (int n = -L; n <= L; ++n) acc += std::polar(1.0, n * phi);
  return acc.value() / double(2 * L + 1);
}

double interference_bound(double p, double theta, int L, PhaseConvention conv) {
  const double phi = conv == PhaseConvention::Spectrum ? p - theta : p + theta;
  const double delta = std::abs(phi - 2 * kPi * std::round(phi / (2 * kPi)));
  const double s = std::abs(std::sin(delta / 2));
  return s > 0 ? 1.0 / ((2 * L + 1) * s) : std::numeric_limits<double>::infinity();
}

cplx theta3(const ThetaArgs& args, int k_max) {
  const double T = args.tau.imag();
  if (!(T > 0)) throw DomainError("theta3 needs Im tau > 0");
  if (k_max <= 0) {
    // log|term| = -pi T k^2 - 2 k Im Z peaks at k* = -Im Z/(pi T)
    const double k_star = -args.Z.imag() / (kPi * T);
    k_max = checked_cut(std::abs(k_star) + std::sqrt(kLogCut / (kPi * T))) + 1;
  }
  CompensatedSum<cplx> acc;
  for (int k = -k_max; k <= k_max; ++k) {
    const double kd = k;
    acc += std::exp(kI * kPi * kd * kd * args.tau + 2.0 * kI * kd * args.Z);
  }
  return acc.value();
}

double theta_modular_defect(const ThetaArgs& args) {
  const cplx lhs = theta3(args);
  const cplx t = args.tau;
  const cplx rhs = std::pow(-kI * t, -0.5) * std::exp(args.Z * args.Z / (kI * kPi * t)) *
                   theta3({args.Z / t, -1.0 / t});
  return std::abs(lhs - rhs);
}

cplx spectral_green(const RotatorParams& params, int k_max) {
  const RotatorParams p = params.validated();
  const double tau = p.tau_e();
  if (k_max <= 0) k_max = checked_cut(std::sqrt(2 * p.inertia * kLogCut / tau) / (2 * kPi)) + 2;
  CompensatedSum<cplx> acc;
  for (int k = -k_max; k <= k_max; ++k) {
    const double pk = 2 * kPi * k + p.theta;
    acc += std::exp(-pk * pk * tau / (2 * p.inertia) + kI * pk * p.dN);
  }
  return acc.value() / (2 * kPi);
}

cplx spectral_green_theta(const RotatorParams& params) {
  const RotatorParams p = params.validated();
  const double tau = p.tau_e();
  // p_k^2 = theta^2 + 4 pi theta k + 4 pi^2 k^2: the k^2 part sets tau', the
  // linear parts (theta, dN) combine into Z.
  const ThetaArgs args{kPi * p.dN + kI * kPi * p.theta * tau / p.inertia,
                       kI * 2.0 * kPi * tau / p.inertia};
  const cplx prefactor =
      std::exp(-p.theta * p.theta * tau / (2 * p.inertia) + kI * p.theta * p.dN) / (2 * kPi);
  return prefactor * theta3(args);
}

std::vector<cplx> path_green_terms(const RotatorParams& params, int n_lo, int n_hi) {
  const RotatorParams p = params.validated();
  const double tau = p.tau_e();
  const double norm = std::sqrt(p.inertia / (2 * kPi * tau)) / (2 * kPi);
  std::vector<cplx> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double w = p.dN + n;
    out.push_back(norm * std::polar(std::exp(-w * w * p.inertia / (2 * tau)), -p.theta * n));
  }
  return out;
}

cplx path_green(const RotatorParams& params, int n_max) {
  const RotatorParams p = params.validated();
  if (n_max <= 0)
    n_max = checked_cut(std::sqrt(2 * p.tau_e() * kLogCut / p.inertia) + std::abs(p.dN)) + 2;
  CompensatedSum<cplx> acc;
  for (const cplx& t : path_green_terms(p, -n_max, n_max)) acc += t;
  return acc.value();
}

double electric_spectrum(int k, double theta, const MonopoleScale& scale) {
  return std::abs(2 * kPi * k + theta) * scale.alpha_s() / (kPi * kPi * scale.eps());
}

double abelian_electric_field(int k, double theta, double e) {
  if (!(e > 0)) throw DomainError("charge e must be positive");
  return e * (theta / (2 * kPi) + k);
}

}  // namespace ymvac
