#include "ymvac/interference.hpp"

#include <sstream>

#include "ymvac/bps_profiles.hpp"

namespace ymvac {

namespace {

constexpr cplx kI{0, 1};
constexpr double kSingularCondition = 1e12;

Mat2 half_angle(int axis, double phi) {
  return std::cos(phi / 2) * Mat2::Identity() + kI * std::sin(phi / 2) * pauli()[axis];
}

}  // namespace

GroupElement EulerAngles::u() const {
  return GroupElement(half_angle(0, phi1) * half_angle(1, phi2) * half_angle(2, phi3));
}

Eigen::Matrix3d EulerAngles::adjoint() const {
  const Mat2 U = u().matrix();
  const auto& t = pauli();
  Eigen::Matrix3d omega;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) omega(a, b) = 0.5 * (t[a] * U * t[b] * U.adjoint()).trace().real();
  return omega;
}

bool EulerAngles::satisfies_constraint(double tol) const {
  const double s = phi1 + phi2 + phi3;
  return std::abs(s - 4 * kPi * constraint_winding()) <= tol * std::max(1.0, std::abs(s));
}

long EulerAngles::constraint_winding() const {
  return std::lround((phi1 + phi2 + phi3) / (4 * kPi));
}

GroupElement dressed_factor(int n, const EulerAngles& angles, const SpatialPoint& x, double eps,
                            double prefactor) {
  if (!(eps > 0)) throw DomainError("eps must be positive");
  if (n == 0 || x.r() == 0) return GroupElement::identity();
  const Eigen::Vector3d nh(x.n_hat()[0], x.n_hat()[1], x.n_hat()[2]);
  const Eigen::Vector3d m = angles.adjoint() * nh;
  // lambda = c i pi n f01 tau.m = -i tau.w with w = -c pi n f01 m
  const double s = -prefactor * kPi * n * f01_bps(x.r(), eps);
  return exp(AlgebraElement::from_rotation_vector({s * m[0], s * m[1], s * m[2]}));
}

std::pair<int, int> symmetric_window(int L) {
  if (L < 0) throw DomainError("window size L must be non-negative");
  return {-(L / 2), L / 2};
}

Mat2 averaged_two_point(const SpatialPoint& x, const SpatialPoint& y, const EulerAngles& angles_x,
                        const EulerAngles& angles_y, int L, double eps) {
  if (L < 1) throw DomainError("averaged_two_point needs L >= 1");
  const auto [lo, hi] = symmetric_window(L);
  const SpatialPoint minus_y(-1.0 * y.x());
  Mat2 acc = Mat2::Zero();
  for (int n = lo; n <= hi; ++n)
    acc += (dressed_factor(n, angles_x, x, eps) * dressed_factor(n, angles_y, minus_y, eps)).matrix();
  return acc / double(hi - lo + 1);
}

Mat2 averaged_two_point(const SpatialPoint& x, const SpatialPoint& y, const EulerAngles& angles,
                        int L, double eps) {
  return averaged_two_point(x, y, angles, angles, L, eps);
}

const std::array<Mat4c, 4>& dirac_gammas() {
  static const std::array<Mat4c, 4> g = [] {
    std::array<Mat4c, 4> out;
    out[0].setZero();
    out[0].topLeftCorner<2, 2>() = Mat2::Identity();
    out[0].bottomRightCorner<2, 2>() = -Mat2::Identity();
    for (int i = 0; i < 3; ++i) {
      out[i + 1].setZero();
      out[i + 1].topRightCorner<2, 2>() = pauli()[i];
      out[i + 1].bottomLeftCorner<2, 2>() = -pauli()[i];
    }
    return out;
  }();
  return g;
}

const std::array<Mat4c, 4>& euclidean_gammas() {
  static const std::array<Mat4c, 4> g = [] {
    std::array<Mat4c, 4> out = dirac_gammas();
    for (int j = 1; j < 4; ++j) out[j] = -kI * out[j];
    return out;
  }();
  return g;
}

DiracColorMatrix DiracColorMatrix::kron(const Mat4c& spinor, const Mat2& color) {
  DiracColorMatrix d;
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) d.m.block<2, 2>(2 * s, 2 * t) = spinor(s, t) * color;
  return d;
}

DiracColorMatrix DiracColorMatrix::slash(const FourVector& p) {
  const auto& g = dirac_gammas();
  // p_mu gamma^mu with p_0 = p^0, p_j = -p^j
  const Mat4c ps = p[0] * g[0] - p[1] * g[1] - p[2] * g[2] - p[3] * g[3];
  return kron(ps, Mat2::Identity());
}

DiracColorMatrix DiracColorMatrix::t_hat(double r_ref) {
  if (!(r_ref > 0)) throw DomainError("t_hat reference scale must be positive");
  DiracColorMatrix t;
  for (int a = 0; a < 3; ++a) t.m += kron(dirac_gammas()[a + 1], pauli()[a]).m;
  t.m *= kPi / r_ref;
  return t;
}

double DiracColorMatrix::condition_number() const {
  Eigen::JacobiSVD<Mat8c> svd(m);
  const auto& s = svd.singularValues();
  return s(7) > 0 ? s(0) / s(7) : std::numeric_limits<double>::infinity();
}

double DiracColorMatrix::norm() const {
  Eigen::JacobiSVD<Mat8c> svd(m);
  return svd.singularValues()(0);
}

SingularTermError::SingularTermError(int n, double condition)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "p_hat + t_hat n is singular at n = " << n << " (condition number " << condition
           << ")";
        return os.str();
      }()),
      n_(n) {}

MomentumAverage momentum_green_sum(const FourVector& p, const DiracColorMatrix& t, int n_lo,
                                   int n_hi, double normalization) {
  if (n_hi < n_lo) throw DomainError("empty momentum window");
  if (!(normalization > 0)) throw DomainError("normalization must be positive");
  const Mat8c ps = DiracColorMatrix::slash(p).m;
  MomentumAverage out;
  Mat8c acc = Mat8c::Zero();
  for (int n = n_lo; n <= n_hi; ++n) {
    const Mat8c M = ps + double(n) * t.m;
    Eigen::JacobiSVD<Mat8c> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double cond = s(7) > 0 ? s(0) / s(7) : std::numeric_limits<double>::infinity();
    if (!(cond < kSingularCondition)) throw SingularTermError(n, cond);
    out.max_condition = std::max(out.max_condition, cond);
    acc += svd.solve(Mat8c::Identity());
    ++out.terms;
  }
  out.S.m = acc / normalization;
  out.norm = out.S.norm();
  return out;
}

MomentumAverage momentum_green_average(const FourVector& p, const DiracColorMatrix& t, int L) {
  const auto [lo, hi] = symmetric_window(L);
  return momentum_green_sum(p, t, lo, hi, L + 1.0);
}

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("power-law fit needs >= 2 pairs");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0 && y[i] > 0)) throw DomainError("power-law fit needs positive data");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {std::exp((sy - slope * sx) / n), -slope};
}

int LoopGrid::points_per_axis() const {
  return static_cast<int>(std::lround(2 * cutoff / spacing));
}

void LoopGrid::validate() const {
  if (!(cutoff > 0 && spacing > 0 && mass > 0)) throw DomainError("loop grid parameters must be positive");
  const double n = 2 * cutoff / spacing;
  if (std::abs(n - std::round(n)) > 1e-9) throw DomainError("2 cutoff must be a multiple of the spacing");
  if (points_per_axis() > 512) throw DomainError("loop grid exceeds 512 points per axis");
}

double loop_integrand(const FourVector& p, const FourVector& k, double m,
                      [[maybe_unused]] LoopStructure s) {
  // tr[(p.g - i m)(k.g - i m)] / ((p^2 + m^2)(k^2 + m^2)) = 4 (p.k - m^2)/(...).
  // The color trace is tr 1 = 2 for the scalar vertex and tr(tau3 tau3) = 2 for
  // the colored one, whose dressing is trivial far from the monopole.
  const double color = 2.0;
  double pk = 0, pp = 0, kk = 0;
  for (int mu = 0; mu < 4; ++mu) {
    pk += p[mu] * k[mu];
    pp += p[mu] * p[mu];
    kk += k[mu] * k[mu];
  }
  return color * 4 * (pk - m * m) / ((pp + m * m) * (kk + m * m));
}

namespace {

double grid_loop(const FourVector& q, LoopStructure s, const LoopGrid& grid, const FourVector& a) {
  const int N = grid.points_per_axis();
  const double h = grid.spacing;
  std::vector<double> nodes(N);
  for (int i = 0; i < N; ++i) nodes[i] = -grid.cutoff + (i + 0.5) * h;
  CompensatedSum<> total;
  FourVector p, k;
  for (int i0 = 0; i0 < N; ++i0)
    for (int i1 = 0; i1 < N; ++i1) {
      double slab = 0;
      for (int i2 = 0; i2 < N; ++i2)
        for (int i3 = 0; i3 < N; ++i3) {
          p = {nodes[i0] + a[0], nodes[i1] + a[1], nodes[i2] + a[2], nodes[i3] + a[3]};
          for (int mu = 0; mu < 4; ++mu) k[mu] = q[mu] - p[mu];
          slab += loop_integrand(p, k, grid.mass, s);
        }
      total += slab;
    }
  const double measure = std::pow(h, 4) / std::pow(2 * kPi, 4);
  return total.value() * measure;
}

}  // namespace

ShiftedLoopResult shifted_loop_average(const FourVector& q, LoopStructure s, const LoopGrid& grid,
                                       int L) {
  grid.validate();
  const auto [lo, hi] = symmetric_window(L);
  double t2 = 0;
  for (double c : grid.shift) t2 += c * c;
  if (std::sqrt(t2) * L > grid.cutoff / 2) {
    std::ostringstream os;
    os << "shift |t| L = " << std::sqrt(t2) * L << " exceeds cutoff/2 = " << grid.cutoff / 2;
    throw DomainError(os.str());
  }
  ShiftedLoopResult out;
  out.unshifted = grid_loop(q, s, grid, {0, 0, 0, 0});
  CompensatedSum<> acc;
  double n2 = 0;
  for (int n = lo; n <= hi; ++n) {
    if (n == 0) {
      acc += out.unshifted;
      continue;
    }
    const FourVector a{n * grid.shift[0], n * grid.shift[1], n * grid.shift[2], n * grid.shift[3]};
    acc += grid_loop(q, s, grid, a);
    n2 += double(n) * n;
  }
  const double count = hi - lo + 1;
  out.shifted = acc.value() / count;
  out.difference = out.shifted - out.unshifted;
  out.surface_term = 2.0 * t2 * (n2 / count) / (8 * kPi * kPi);
  return out;
}

ColorRatio color_ratio_check(int nc) {
  if (nc < 1) throw DomainError("number of colors must be at least 1");
  const double pred = nc;
  return {pred, pred >= 3.0 && pred <= 3.6};
}

}  // namespace ymvac
