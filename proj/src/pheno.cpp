#include "ymvac/pheno.hpp"

#include <sstream>

namespace ymvac {

namespace {

// Stencil step growing with r so that far nodes keep a fixed relative accuracy.
StencilConfig scaled_stencil(double eps, double r) {
  StencilConfig st = StencilConfig::for_scale(eps);
  st.h *= std::max(1.0, r / eps);
  return st;
}

double contract(const Tensor3& a, const Tensor3& b) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 3; ++c) s += a[i][c] * b[i][c];
  return s;
}

void check_within(double value, double reference, double tol, const char* what) {
  const double rel = std::abs(value / reference - 1);
  if (rel > tol) {
    std::ostringstream os;
    os << what << ": quadrature " << value << " departs from " << reference << " by " << rel
       << " (limit " << tol << ")";
    throw ConsistencyError(os.str());
  }
}

}  // namespace

void PhenoInputs::validate() const {
  std::ostringstream os;
  if (n_f < 1) os << "n_f must be >= 1; ";
  if (n_c < 1) os << "n_c must be >= 1; ";
  if (!(f_pi.value > 0)) os << "f_pi must be positive; ";
  if (!(lambda_uv.value > 0)) os << "lambda_uv must be positive; ";
  if (!(v0_cuberoot.value > 0)) os << "v0_cuberoot must be positive; ";
  if (!(alpha_s > 0)) os << "alpha_s must be positive; ";
  if (!(dm_eta2.value > 0)) os << "dm_eta2 must be positive; ";
  if (!(volume.value > 0)) os << "volume must be positive; ";
  std::string msg = os.str();
  if (!msg.empty()) throw DomainError("PhenoInputs: " + msg.substr(0, msg.size() - 2));
}

GeV<1> magnetic_energy(const MonopoleScale& scale) {
  return GeV<1>(4 * kPi / (scale.g() * scale.g() * scale.eps()));
}

EnergyQuadrature magnetic_energy_quadrature(const MonopoleScale& scale, const QuadratureSpec& quad) {
  const double eps = scale.eps(), g = scale.g();
  quad.validate(eps);
  if (quad.unbounded()) throw DomainError("magnetic_energy_quadrature needs a finite r_max");
  const FieldPair wy = build_fields(scale, FieldVariant::WuYangPlus);
  const double value = integrate_ball(
      quad, eps,
      [&](const SpatialPoint& p) {
        const Tensor3 B = magnetic_tension(wy.gauge, p, scaled_stencil(eps, p.r()), g);
        return contract(B, B);
      },
      eps);
  const double closed = magnetic_energy(scale).value;
  return {value, closed, closed * (1 - eps / quad.r_max)};
}

GeV<-1> rotary_momentum(const MonopoleScale& scale, InertiaMethod method,
                        const QuadratureSpec& quad) {
  const double formula = 4 * kPi * kPi * scale.eps() / scale.alpha_s();
  if (method == InertiaMethod::Formula) return GeV<-1>(formula);
  quad.validate(scale.eps());
  const FieldPair bps = build_fields(scale, FieldVariant::BPS);
  const ColorScalarField phase = gribov_phase_field(scale);
  const double value = integrate_ball(quad, scale.eps(), [&](const SpatialPoint& p) {
    const Tensor3 D =
        covariant_derivative(bps.gauge, phase, p, scaled_stencil(scale.eps(), p.r()), scale.g());
    return contract(D, D);
  });
  check_within(value, formula, 0.05, "rotary_momentum");
  return GeV<-1>(value);
}

GeV<-1> rotary_momentum_from_energy(double alpha_s, GeV<1> energy) {
  if (!(alpha_s > 0)) throw DomainError("alpha_s must be positive");
  return (4 * kPi * kPi / (alpha_s * alpha_s)) / energy;
}

GeV<1> vacuum_hamiltonian(double p_n, const MonopoleScale& scale) {
  const double g2 = scale.g() * scale.g();
  const double k = g2 / (8 * kPi * kPi);
  return GeV<1>(2 * kPi / (g2 * scale.eps()) * (p_n * p_n * k * k + 1));
}

double bogomolnyi_energy_bound(double m, double a, double g) {
  if (!(g > 0)) throw DomainError("coupling g must be positive");
  return 4 * kPi * m * a / g;
}

NormalizationResult normalization_check(const MonopoleScale& scale, const QuadratureSpec& quad) {
  quad.validate(scale.eps());
  const double eps = scale.eps(), g = scale.g();
  const FieldPair bps = build_fields(scale, FieldVariant::BPS);
  const ColorScalarField phase = gribov_phase_field(scale);
  CompensatedSum<> total, tail;
  for (const auto& node : spherical_nodes(quad, eps)) {
    const StencilConfig st = scaled_stencil(eps, node.point.r());
    const Tensor3 D = covariant_derivative(bps.gauge, phase, node.point, st, g);
    const Tensor3 B = magnetic_tension(bps.gauge, node.point, st, g);
    const double c = node.weight * contract(D, B);
    total += c;
    if (node.point.r() > 10 * eps) tail += c;
  }
  NormalizationResult res;
  res.value = g * g / (8 * kPi * kPi) * total.value();
  res.tail_fraction = std::abs(tail.value() / total.value());
  check_within(res.value, 1.0, 0.05, "normalization_check");
  return res;
}

SchwingerResult schwinger_mass(double e, double c_m) {
  if (!(e > 0)) throw DomainError("charge e must be positive");
  const double iv = std::pow(2 * kPi / e, 2);  // I_QED V
  SchwingerResult res;
  res.value = c_m * c_m / iv;
  res.closed_form = e * e / kPi;
  res.relative_defect = std::abs(res.value / res.closed_form - 1);
  res.consistent = res.relative_defect <= 1e-14;
  return res;
}

GeV<2> eta_mass_shift(const PhenoInputs& in, GeV<4> b2) {
  in.validate();
  const double nf2 = double(in.n_f) * in.n_f;
  return (nf2 * in.alpha_s * in.alpha_s / (2 * std::pow(kPi, 3))) * b2 / (in.f_pi * in.f_pi);
}

GeV<-1> eta_constant(const PhenoInputs& in) {
  in.validate();
  return (in.n_f * std::sqrt(2 / kPi)) / in.f_pi;
}

GeV<4> b2_numerator(const PhenoInputs& in) {
  in.validate();
  const double nf2 = double(in.n_f) * in.n_f;
  return (2 * std::pow(kPi, 3) / nf2) * (in.f_pi * in.f_pi * in.dm_eta2);
}

GeV<4> b2_estimate(const PhenoInputs& in) {
  return b2_numerator(in) / (in.alpha_s * in.alpha_s);
}

namespace {

double alpha_mod_from_arg(double arg) {
  if (!(arg > 1)) {
    std::ostringstream os;
    os << "alpha_mod_zero: log argument " << arg << " must exceed 1";
    throw DomainError(os.str());
  }
  return 1 / (kBeta0 * (1 + 2 * std::log(arg)));
}

}  // namespace

double alpha_mod_zero(const PhenoInputs& in) {
  in.validate();
  return alpha_mod_from_arg(4 * std::cbrt(double(in.n_c)) * in.v0_cuberoot.value /
                            in.lambda_uv.value);
}

double alpha_mod_zero_literal(const PhenoInputs& in) {
  in.validate();
  return alpha_mod_from_arg(4 * in.n_c * in.v0_cuberoot.value / in.lambda_uv.value);
}

double gluon_structural_mass(double omega, double k) {
  if (!(omega >= k)) throw DomainError("gluon_structural_mass: omega < k (tachyonic input)");
  return std::sqrt(omega * omega - k * k);
}

std::optional<double> omega_asymptotic(double k, double k_lo, double k_hi) {
  if (!(k > 0)) throw DomainError("omega_asymptotic needs k > 0");
  if (k < k_lo) return 2 / (k * k);
  if (k > k_hi) return k;
  return std::nullopt;
}

VacuumQuantities vacuum_quantities(const MonopoleScale& scale, GeV<-3> volume) {
  if (!(volume.value > 0)) throw DomainError("volume must be positive");
  const GeV<1> energy = magnetic_energy(scale);
  return {energy / volume, energy, rotary_momentum(scale, InertiaMethod::Formula),
          [scale](double p) { return vacuum_hamiltonian(p, scale); }};
}

}  // namespace ymvac
