#include "efimov/two_center.hpp"

#include "efimov/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace efimov::two_center {

using specfun::kPi;

namespace {

constexpr double kSqrt2 = 1.41421356237309504880168872420969808;

void check_t(double t_theta) {
  if (!(t_theta <= 1.0)) {
    throw std::domain_error("t_theta = " + std::to_string(t_theta) +
                            " > 1: the light-particle spectrum is purely essential");
  }
}

// delta = g - 1 - x (1 - t) with x = r/sqrt2, computed without the
// cancellation that the direct formula suffers at small r.
double delta_of(double t, double r) {
  const double x = r / kSqrt2;
  if (x < 1e-3) {
    return x * (-2.0 * (1.0 - t) +
                x * (-t + x * ((1.0 + t) / 3.0 +
                               x * (-1.0 / 6.0 + x * ((1.0 - t) / 30.0 +
                                                      x * (t / 90.0 - x * (1.0 + t) / 630.0))))));
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double sh = std::sin(0.5 * x);
  return t * std::exp(-x) * s + std::expm1(-x) * c - 2.0 * sh * sh - x * (1.0 - t);
}

// Solves e^{-u} - u = 1 + delta for u. The function is convex and
// decreasing, so Newton from the left of the root converges monotonically.
double solve_u(double delta) {
  double u = delta > -1.0 ? -0.5 * delta + delta * delta / 16.0 : -delta - 1.0;
  for (int it = 0; it < 100; ++it) {
    const double f = std::expm1(-u) - u - delta;
    const double fp = -std::exp(-u) - 1.0;
    const double du = f / fp;
    u -= du;
    if (std::fabs(du) <= 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(u)) break;
  }
  return u;
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double distance(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

ComplexMatrix2 invert(std::complex<double> d, std::complex<double> o, bool* singular) {
  const std::complex<double> det = d * d - o * o;
  const double scale = std::norm(d) + std::norm(o);
  *singular = std::abs(det) <= 1e-14 * scale;
  return {d / det, -o / det, -o / det, d / det};
}

double sector_sign(Sector s) { return s == Sector::Bosonic ? 1.0 : -1.0; }

// Richardson table on samples at rho0 / 2^j for a quantity with an
// integer-power error series.
double richardson(std::array<double, 8> v, int n) {
  for (int level = 1; level < n; ++level) {
    const double f = std::ldexp(1.0, level);
    for (int j = n - 1; j >= level; --j) v[j] = (f * v[j] - v[j - 1]) / (f - 1.0);
  }
  return v[n - 1];
}

BoundaryResidual extract(Sector sector, double lambda, const CenterGeometry& geo, int i,
                         double alpha, double coupling) {
  if (i != 1 && i != 2) throw std::invalid_argument("center index must be 1 or 2");
  const double r = geo.separation();
  const double kappa = std::sqrt(lambda);
  const double sign = sector_sign(sector);
  const Vec3& yi = i == 1 ? geo.y1 : geo.y2;

  // Probe direction perpendicular to the axis.
  Vec3 axis{geo.y1[0] - geo.y2[0], geo.y1[1] - geo.y2[1], geo.y1[2] - geo.y2[2]};
  Vec3 e = std::fabs(axis[0]) < 0.9 * r ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  const double proj = dot(e, axis) / (r * r);
  for (int c = 0; c < 3; ++c) e[c] -= proj * axis[c];
  const double en = std::sqrt(dot(e, e));
  for (double& c : e) c /= en;

  const auto psi = [&](double rho) {
    Vec3 x{yi[0] + rho * e[0], yi[1] + rho * e[1], yi[2] + rho * e[2]};
    const double d1 = distance(x, geo.y1);
    const double d2 = distance(x, geo.y2);
    return std::exp(-kappa * d1) / (4.0 * kPi * d1) + sign * std::exp(-kappa * d2) / (4.0 * kPi * d2);
  };

  constexpr int n = 8;
  const double rho0 = 0.05 * std::min(r, kappa > 0.0 ? 1.0 / kappa : r);
  std::array<double, 8> f{};
  std::array<double, 8> slope{};
  for (int j = 0; j < n; ++j) {
    const double rho = std::ldexp(rho0, -j);
    const double f_full = 4.0 * kPi * rho * psi(rho);
    const double f_half = 4.0 * kPi * 0.5 * rho * psi(0.5 * rho);
    f[j] = f_full;
    slope[j] = (f_full - f_half) / (0.5 * rho);
  }
  BoundaryResidual out{};
  out.charge = richardson(f, n);
  out.constant = richardson(slope, n) / (4.0 * kPi);
  out.expected = out.charge * (alpha + coupling / (4.0 * kPi * r));
  out.residual = out.constant - out.expected;
  return out;
}

}  // namespace

const char* to_string(Sector s) { return s == Sector::Bosonic ? "bosonic" : "fermionic"; }

double alpha_from_t(double t_theta) {
  check_t(t_theta);
  return (t_theta - 1.0) / (4.0 * kSqrt2 * kPi);
}

double a0_from_t(double t_theta) {
  check_t(t_theta);
  if (t_theta == 1.0) return std::numeric_limits<double>::infinity();
  return kSqrt2 / (1.0 - t_theta);
}

Oscillation exchange_oscillation(double r, double t_theta) {
  if (!(r >= 0.0)) throw std::domain_error("exchange_oscillation: r must be >= 0");
  const double x = r / kSqrt2;
  const double g = std::exp(-x) * (t_theta * std::sin(x) + std::cos(x));
  return {g, -g};
}

double oscillation_root(double t_theta, int k) {
  if (k < 1) throw std::domain_error("oscillation_root: k must be >= 1");
  // arccot on (0, pi)
  const double acot = t_theta == 0.0 ? 0.5 * kPi : std::atan2(1.0, t_theta);
  return kSqrt2 * (k * kPi - acot);
}

double CenterGeometry::separation() const { return distance(y1, y2); }

CenterGeometry CenterGeometry::along_z(double r) {
  if (!(r > 0.0)) throw std::domain_error("CenterGeometry: r must be > 0");
  return {{0.0, 0.0, 0.5 * r}, {0.0, 0.0, -0.5 * r}};
}

GammaMatrix gamma_matrix(Sector sector, double t_theta, double lambda, double r) {
  check_t(t_theta);
  if (!(lambda >= 0.0) || !(r > 0.0)) {
    throw std::domain_error("gamma_matrix: need lambda >= 0 and r > 0");
  }
  const double sl = std::sqrt(lambda);
  const double g = exchange_oscillation(r, t_theta).g;
  const double alpha = alpha_from_t(t_theta);
  // g - e^{-sl r} as (g - 1) - expm1(-sl r) keeps the O(r^2) difference at small r.
  const double g_minus_1 = delta_of(t_theta, r) + r / kSqrt2 * (1.0 - t_theta);
  GammaMatrix m;
  m.diagonal = sl / (4.0 * kPi) + alpha;
  m.off_diagonal = sector_sign(sector) * (g_minus_1 - std::expm1(-sl * r)) / (4.0 * kPi * r);
  m.diagonal_terms = sl / (4.0 * kPi) - alpha;
  m.off_diagonal_terms = (std::fabs(g) + std::exp(-sl * r)) / (4.0 * kPi * r);
  m.lambda = lambda;
  m.sector = sector;
  m.t_theta = t_theta;
  m.r = r;
  return m;
}

GammaMatrix gamma_matrix_local(double alpha, double lambda, double r, Sector sector) {
  if (!(lambda >= 0.0) || !(r > 0.0)) {
    throw std::domain_error("gamma_matrix_local: need lambda >= 0 and r > 0");
  }
  const double sl = std::sqrt(lambda);
  GammaMatrix m;
  m.diagonal = sl / (4.0 * kPi) + alpha;
  m.off_diagonal = -sector_sign(sector) * std::exp(-sl * r) / (4.0 * kPi * r);
  m.diagonal_terms = sl / (4.0 * kPi) + std::fabs(alpha);
  m.off_diagonal_terms = std::fabs(m.off_diagonal);
  m.lambda = lambda;
  m.sector = sector;
  m.t_theta = 1.0 + 4.0 * kSqrt2 * kPi * alpha;
  m.r = r;
  return m;
}

double effective_eigenvalue(double t_theta, double r) {
  check_t(t_theta);
  if (!(r >= 0.0)) throw std::domain_error("effective_eigenvalue: r must be >= 0");
  if (r == 0.0) return -0.5 * (1.0 - t_theta) * (1.0 - t_theta);
  if (std::isinf(r)) return -0.5 * (1.0 - t_theta) * (1.0 - t_theta);
  const double u = solve_u(delta_of(t_theta, r));
  const double k = u / r;
  return -k * k;
}

double local_effective_eigenvalue(double alpha, double r) {
  if (!(alpha <= 0.0)) throw std::domain_error("local_effective_eigenvalue: alpha must be <= 0");
  if (!(r > 0.0)) throw std::domain_error("local_effective_eigenvalue: r must be > 0");
  const double b = -4.0 * kPi * alpha * r;  // >= 0
  const double k = (specfun::lambert_w0(std::exp(-b)) + b) / r;
  return -k * k;
}

std::optional<double> odd_state_eigenvalue(double t_theta, double r) {
  check_t(t_theta);
  if (!(r > 0.0)) throw std::domain_error("odd_state_eigenvalue: r must be > 0");
  const double b = r / kSqrt2 * (1.0 - t_theta) + exchange_oscillation(r, t_theta).g;
  if (!(b > 1.0)) return std::nullopt;
  const double s = b + specfun::lambert_w0(-std::exp(-b));
  const double k = s / r;
  return -k * k;
}

ScatteringLength scattering_length(Sector, double t_theta, double r) {
  check_t(t_theta);
  if (!(r >= 0.0)) throw std::domain_error("scattering_length: r must be >= 0");
  const double inf = std::numeric_limits<double>::infinity();
  if (std::isinf(r)) {
    if (t_theta == 1.0) return {inf, true};
    return {2.0 * kSqrt2 / (1.0 - t_theta), false};
  }
  if (r == 0.0) {
    if (t_theta == 1.0) return {inf, true};
    return {kSqrt2 / (1.0 - t_theta), false};
  }
  const double denom = -delta_of(t_theta, r);
  if (denom == 0.0) return {inf, true};
  return {2.0 * r / denom, false};
}

ComplexMatrix2 gamma_inverse_at_energy(Sector sector, double t_theta, double k, double r) {
  check_t(t_theta);
  const std::complex<double> ikr(0.0, k * r);
  const std::complex<double> d = std::complex<double>(alpha_from_t(t_theta), -k / (4.0 * kPi));
  const double g = exchange_oscillation(r, t_theta).g;
  const std::complex<double> o = sector_sign(sector) * (g - std::exp(ikr)) / (4.0 * kPi * r);
  bool singular = false;
  return invert(d, o, &singular);
}

Amplitude scattering_amplitude(Sector sector, double t_theta, double k, const Vec3& omega,
                               const Vec3& omega_prime, const CenterGeometry& geometry) {
  check_t(t_theta);
  if (!(k >= 0.0)) throw std::domain_error("scattering_amplitude: k must be >= 0");
  const double r = geometry.separation();
  const std::complex<double> d(alpha_from_t(t_theta), -k / (4.0 * kPi));
  const double g = exchange_oscillation(r, t_theta).g;
  const std::complex<double> o =
      sector_sign(sector) * (g - std::exp(std::complex<double>(0.0, k * r))) / (4.0 * kPi * r);
  bool singular = false;
  const ComplexMatrix2 inv = invert(d, o, &singular);
  const Vec3* y[2] = {&geometry.y1, &geometry.y2};
  const double s = sector_sign(sector);
  std::complex<double> sum = 0.0;
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      const double w = (m + n) % 2 == 0 ? 1.0 : s;
      const double phase = k * (dot(*y[m], omega_prime) - dot(*y[n], omega));
      sum += w * inv[2 * m + n] * std::polar(1.0, phase);
    }
  }
  return {sum / (4.0 * kPi), singular};
}

WaveValue generalized_eigenfunction_with(const ComplexMatrix2& coefficients, Sector sector,
                                         const Vec3& k, const Vec3& x,
                                         const CenterGeometry& geometry,
                                         double exclusion_radius) {
  const double r = geometry.separation();
  const double excl = exclusion_radius < 0.0 ? 1e-3 * r : exclusion_radius;
  const double kn = std::sqrt(dot(k, k));
  const Vec3* y[2] = {&geometry.y1, &geometry.y2};
  const double s = sector_sign(sector);
  WaveValue out{std::polar(1.0, dot(k, x)), false};
  for (int m = 0; m < 2; ++m) {
    const double dm = distance(x, *y[m]);
    if (dm < excl) out.too_close = true;
    const std::complex<double> spherical = std::polar(1.0, kn * dm) / (4.0 * kPi * dm);
    for (int n = 0; n < 2; ++n) {
      const double w = (m + n) % 2 == 0 ? 1.0 : s;
      out.value += w * coefficients[2 * m + n] * std::polar(1.0, dot(k, *y[n])) * spherical;
    }
  }
  return out;
}

WaveValue generalized_eigenfunction(Sector sector, double t_theta, const Vec3& k, const Vec3& x,
                                    const CenterGeometry& geometry, double exclusion_radius) {
  const double kn = std::sqrt(dot(k, k));
  const ComplexMatrix2 inv = gamma_inverse_at_energy(sector, t_theta, kn, geometry.separation());
  return generalized_eigenfunction_with(inv, sector, k, x, geometry, exclusion_radius);
}

BoundaryResidual bethe_peierls_residual(Sector sector, double t_theta, double lambda,
                                        const CenterGeometry& geometry, int i) {
  const auto osc = exchange_oscillation(geometry.separation(), t_theta);
  const double coupling = sector == Sector::Bosonic ? osc.g : osc.h;
  return extract(sector, lambda, geometry, i, alpha_from_t(t_theta), coupling);
}

BoundaryResidual bethe_peierls_residual_local(Sector sector, double alpha, double lambda,
                                              const CenterGeometry& geometry, int i) {
  return extract(sector, lambda, geometry, i, alpha, 0.0);
}

}  // namespace efimov::two_center
