#include "efimov/off_unitarity.hpp"

#include "efimov/errors.hpp"
#include "efimov/specfun.hpp"
#include "efimov/two_center.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace efimov::off_unitarity {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880168872420969808;
// Stand-in for the infinite upper limit, in units of a0. The neglected tail
// of the estimate is below 2 e^{-40}.
constexpr double kZetaInf = 40.0;

void check_t(double t_theta, bool allow_negative) {
  if (!(t_theta < 1.0) || (!allow_negative && !(t_theta >= 0.0))) {
    throw std::domain_error("t_theta = " + std::to_string(t_theta) + " outside the allowed range");
  }
}

template <class F>
double integrate(F f, double a, double b) {
  double err = 0.0;
  double l1 = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, 20, 1e-13, &err, &l1);
  if (err > 1e-10 * std::max(std::fabs(v), 1e-300)) {
    throw QuadratureError("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                          "] stopped at relative error " + std::to_string(err / std::fabs(v)));
  }
  return v;
}

// r |V| of the long-range estimate, as a density in zeta = r / a0.
double estimate_density(double z) {
  const double e1 = std::exp(-z);
  const double e2 = e1 * e1;
  return 2.0 * (e1 - e2) + e2 / z;
}

// Same for the exact outer branch: W(e^{-z}) (W(e^{-z}) + 2 z) / z.
double outer_density(double z) {
  const double w = specfun::lambert_w0(std::exp(-z));
  return w * (w + 2.0 * z) / z;
}

}  // namespace

double shifted_potential(double t_theta, double r) {
  check_t(t_theta, true);
  if (r < 0.0) throw std::domain_error("r must be >= 0");
  const double x = r / kSqrt2;
  const double shift = 0.5 * (1.0 - t_theta) * (1.0 - t_theta);
  if (x < 1.0) return two_center::effective_eigenvalue(t_theta, r) + shift;
  // u = sqrt(lambda) r = A + W(e^{-A}) with A = x(1-t) - g. Writing
  // lambda r^2 - x^2 (1-t)^2 = (u - x(1-t))(u + x(1-t)) keeps the small
  // difference exact at large r.
  const double a0x = x * (1.0 - t_theta);
  const double g = two_center::exchange_oscillation(r, t_theta).g;
  const double w = specfun::lambert_w0(std::exp(-(a0x - g)));
  const double u = a0x - g + w;
  return -(w - g) * (u + a0x) / (r * r);
}

double theta_outer_branch(double t_theta, double r) {
  check_t(t_theta, true);
  if (!(r > 0.0)) throw std::domain_error("outer branch needs r > 0");
  const double z = r * (1.0 - t_theta) / kSqrt2;
  const double w = specfun::lambert_w0(std::exp(-z));
  return -w * (w + 2.0 * z) / (r * r);
}

double theta_potential(double t_theta, double r) {
  check_t(t_theta, false);
  if (r <= two_center::a0_from_t(t_theta)) return shifted_potential(t_theta, r);
  return theta_outer_branch(t_theta, r);
}

double theta_long_range_estimate(double t_theta, double r) {
  check_t(t_theta, true);
  const double a0 = two_center::a0_from_t(t_theta);
  const double z = r / a0;
  const double e1 = std::exp(-z);
  const double e2 = e1 * e1;
  return -(e2 / (r * r) + (2.0 / a0) * (e1 - e2) / r);
}

double theta_jump(double t_theta) {
  const double a0 = two_center::a0_from_t(t_theta);
  return theta_outer_branch(t_theta, a0) - shifted_potential(t_theta, a0);
}

double size_ratio_leading() {
  const double w = specfun::omega();
  auto f = [w](double z) {
    const double e1 = std::exp(-z);
    const double e2 = e1 * e1;
    return e2 + 2.0 * z * (e1 - e2) - w * w;
  };
  std::uintmax_t iters = 200;
  const auto tol = boost::math::tools::eps_tolerance<double>(52);
  const auto b = boost::math::tools::toms748_solve(f, 1.0, 10.0, tol, iters);
  return 0.5 * (b.first + b.second);
}

SpatialSize spatial_size(double t_theta) {
  check_t(t_theta, false);
  SpatialSize out{};
  out.a0 = two_center::a0_from_t(t_theta);
  out.ratio = size_ratio_leading();
  out.size = out.ratio * out.a0;

  // First sign change of V_theta + lambda_1 beyond a0.
  auto h = [t_theta](double r) {
    return theta_outer_branch(t_theta, r) - two_center::effective_eigenvalue(1.0, r);
  };
  double lo = out.a0;
  double hlo = h(lo);
  bool found = false;
  double hi = lo;
  for (int i = 1; i <= 900; ++i) {
    hi = out.a0 * (1.0 + 0.01 * i);
    const double hhi = h(hi);
    if ((hlo < 0.0) != (hhi < 0.0)) {
      found = true;
      break;
    }
    lo = hi;
    hlo = hhi;
  }
  if (!found) {
    throw NoCrossingError("no crossing of the glued potential with -lambda_1 in [a0, 10 a0]");
  }
  std::uintmax_t iters = 200;
  const auto tol = boost::math::tools::eps_tolerance<double>(50);
  const auto b = boost::math::tools::toms748_solve(h, lo, hi, tol, iters);
  out.crossing = 0.5 * (b.first + b.second);
  out.crossing_ratio = out.crossing / out.a0;
  return out;
}

double bargmann_antiderivative(double x) {
  if (!(x > 0.0)) throw std::domain_error("antiderivative needs x > 0");
  const double e1 = std::exp(-x);
  return -2.0 * e1 + e1 * e1 - specfun::incomplete_gamma0(2.0 * x);
}

double bargmann_inner_tail(double r_lo, double a0, double size_ratio) {
  if (!(r_lo > 0.0) || !(a0 > 0.0) || !(size_ratio * a0 > r_lo)) {
    throw std::domain_error("bargmann_inner_tail needs 0 < r_lo < S");
  }
  return bargmann_antiderivative(size_ratio) - bargmann_antiderivative(r_lo / a0);
}

BargmannReport bargmann_bound(double t_theta, int l, double size_ratio) {
  check_t(t_theta, false);
  if (l < 0) throw std::domain_error("l must be >= 0");
  const double zs = size_ratio > 0.0 ? size_ratio : size_ratio_leading();
  if (!(zs > 1.0)) throw std::domain_error("S / a0 must exceed 1");
  const double a0 = two_center::a0_from_t(t_theta);

  BargmannReport rep;
  rep.l = l;
  rep.t_theta = t_theta;
  rep.jump_at_a0 = theta_jump(t_theta);

  // [0, a0]: r |V_sh| is smooth and vanishes at 0. Past a few units the
  // integrand decays like 1/r, so the remainder is done in ln r.
  auto inner = [t_theta](double r) { return r * std::fabs(shifted_potential(t_theta, r)); };
  const double split = std::min(a0, 8.0);
  double v0 = integrate(inner, 0.0, split);
  if (a0 > split) {
    v0 += integrate([&](double s) {
      const double r = std::exp(s);
      return r * inner(r);
    }, std::log(split), std::log(a0));
  }
  rep.segments.push_back({0.0, a0, v0, std::numeric_limits<double>::quiet_NaN()});

  const double fs = bargmann_antiderivative(zs);
  const double mid = integrate(estimate_density, 1.0, zs);
  rep.segments.push_back({a0, zs * a0, mid, fs - bargmann_antiderivative(1.0)});
  const double tail = integrate(estimate_density, zs, kZetaInf);
  rep.segments.push_back({zs * a0, std::numeric_limits<double>::infinity(), tail, -fs});

  rep.exact_outer_a0_s = integrate(outer_density, 1.0, zs);
  rep.exact_outer_s_inf = integrate(outer_density, zs, kZetaInf);

  for (const auto& s : rep.segments) rep.total += s.value;
  return rep;
}

}  // namespace efimov::off_unitarity
