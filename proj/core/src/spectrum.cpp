#include "efimov/spectrum.hpp"

#include "efimov/errors.hpp"
#include "efimov/specfun.hpp"
#include "efimov/two_center.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace efimov::spectrum {

using specfun::kPi;

namespace {

constexpr double kSqrt2 = 1.41421356237309504880168872420969808;

void check_l(int l) {
  if (l < 0) throw std::domain_error("l must be >= 0");
  if (l > 11) throw std::domain_error("l > 11 is outside the supported Bessel orders");
}

// 0F1(; b; z) by its power series; callers keep |z| moderate.
double hyp0f1_series(double b, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 500; ++k) {
    term *= z / ((b + k) * (k + 1.0));
    sum += term;
    if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
  }
  return sum;
}

constexpr double kSeriesLimitPos = 400.0;

bool use_series(int l, double s) {
  if (s >= 0.0) return s <= kSeriesLimitPos;
  return std::sqrt(-s) < std::max(6.0, l + 3.0);
}

// F(l, s) for s <= 0 or moderate s > 0 (no scaling needed).
double interior_plain(int l, double s) {
  const double b = l + 1.5;
  if (use_series(l, s)) return hyp0f1_series(b, 0.25 * s);
  const double nu = l + 0.5;
  if (s > 0.0) {
    const double xi = std::sqrt(s);
    return std::tgamma(b) * std::pow(0.5 * xi, -nu) * specfun::bessel_i_half(l, xi);
  }
  const double y = std::sqrt(-s);
  return std::tgamma(b) * std::pow(0.5 * y, -nu) * specfun::bessel_j_half(l, y);
}

// F(l, s) e^{-sqrt(s)} for s > 0; F(l, s) for s <= 0.
double interior_scaled(int l, double s) {
  if (s <= 0.0) return interior_plain(l, s);
  const double xi = std::sqrt(s);
  if (s <= kSeriesLimitPos) return hyp0f1_series(l + 1.5, 0.25 * s) * std::exp(-xi);
  return std::tgamma(l + 1.5) * std::pow(0.5 * xi, -(l + 0.5)) *
         specfun::bessel_i_half_scaled(l, xi);
}

// r u'/u of the interior solution, in homogeneous form: returns
// (r u', u) up to a common positive factor.
std::pair<double, double> interior_pair(int l, double s) {
  const double fl = interior_scaled(l, s);
  const double fl1 = interior_scaled(l + 1, s);
  return {(l + 1.0) * fl + s * fl1 / (2.0 * l + 3.0), fl};
}

double theta_of(double tau, const EfimovExponent& ex) {
  return ex.beta * std::log(0.5 * tau) - ex.phi_beta;
}

double tau_of(double theta, const EfimovExponent& ex) {
  return 2.0 * std::exp((theta + ex.phi_beta) / ex.beta);
}

std::string tag_for(const PotentialSpec& p) { return p.inverse_square_tail() ? "efimov" : "efimov_like"; }

}  // namespace

MassConfig MassConfig::from_ratio(double ratio) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) throw std::domain_error("mass ratio must be > 0");
  return {ratio, 1.0};
}

MassConfig MassConfig::from_eps2(double eps2) {
  if (!(eps2 > 0.0) || !(eps2 < 4.0)) throw std::domain_error("eps2 must lie in (0, 4)");
  return {0.5 * (4.0 / eps2 - 1.0), 1.0};
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Analytic:
      return "analytic";
    case Method::Matching:
      return "matching";
    case Method::Numeric:
      return "numeric";
  }
  return "?";
}

double critical_mass(int l) {
  if (l < 0) throw std::domain_error("l must be >= 0");
  const double w2 = specfun::omega() * specfun::omega();
  return (4.0 * l * (l + 1.0) + 1.0 - w2) / (2.0 * w2);
}

EfimovExponent efimov_exponent(const MassConfig& mass, int l, double strength) {
  if (!(mass.M > 0.0) || !(mass.m > 0.0)) throw std::domain_error("masses must be > 0");
  if (l < 0) throw std::domain_error("l must be >= 0");
  const double w2 = specfun::omega() * specfun::omega();
  const double b2 = strength * w2 / mass.eps2() - l * (l + 1.0) - 0.25;
  if (!(b2 > 0.0)) {
    std::ostringstream os;
    os.precision(10);
    os << "M/m = " << mass.ratio() << " is not above the critical mass ratio "
       << critical_mass(l) << " for l = " << l;
    throw BelowCriticalMass(os.str(), critical_mass(l));
  }
  EfimovExponent e;
  e.l = l;
  e.beta = std::sqrt(b2);
  e.phi_beta = specfun::gamma_phase(e.beta);
  return e;
}

double interior_function(int l, double s) {
  check_l(l);
  if (s > 0.0 && !use_series(l, s) && std::sqrt(s) > 700.0) {
    return std::numeric_limits<double>::infinity();
  }
  return interior_plain(l, s);
}

double interior_log_factor(int l, double s) {
  check_l(l);
  const auto [ru, u] = interior_pair(l, s);
  // f = 1 / (2 r u'/u - 1) = u / (2 ru - u).
  return u / (2.0 * ru - u);
}

double universal_core_radius() { return kSqrt2 * 0.75 * kPi; }

SpectrumResult analytic_efimov_levels(const MassConfig& mass, int l, int n_first, int n_last,
                                      double r0, double lambda) {
  check_l(l);
  if (!(r0 > 0.0)) throw std::domain_error("r0 must be > 0");
  if (!(lambda <= 0.0)) throw std::domain_error("Lambda must be <= 0");
  const EfimovExponent ex = efimov_exponent(mass, l);
  const double eps2 = mass.eps2();
  const double f = interior_log_factor(l, lambda * r0 * r0 / eps2);
  const double a = std::atan(2.0 * ex.beta * f);
  const double pref = eps2 * 4.0 / (r0 * r0);

  SpectrumResult res;
  res.l = l;
  res.mass = mass;
  res.potential = PotentialSpec::auxiliary_core(lambda, r0).describe();
  res.tag = "efimov";
  for (int n = n_first; n <= n_last; ++n) {
    Level lv;
    lv.n = n;
    lv.E = -pref * std::exp((2.0 / ex.beta) * (a + ex.phi_beta - n * kPi));
    lv.method = Method::Analytic;
    lv.subnormal = std::fabs(lv.E) < DBL_MIN;
    res.levels.push_back(lv);
  }
  return res;
}

double matching_function(const MassConfig& mass, int l, double r0, double lambda, double tau0) {
  check_l(l);
  const EfimovExponent ex = efimov_exponent(mass, l);
  const double s = tau0 * tau0 + lambda * r0 * r0 / mass.eps2();
  const specfun::KImag k = specfun::bessel_k_imag_series(ex.beta, tau0);
  const double ext_ru = 0.5 * k.value + tau0 * k.derivative;
  const double ext_u = k.value;
  const auto [in_ru, in_u] = interior_pair(l, s);
  const double d = ext_ru * in_u - ext_u * in_ru;
  return d / (std::hypot(ext_ru, ext_u) * std::hypot(in_ru, in_u));
}

SpectrumResult matching_levels(const MassConfig& mass, int l, int count, double r0,
                               double lambda) {
  check_l(l);
  if (!(r0 > 0.0)) throw std::domain_error("r0 must be > 0");
  if (!(lambda <= 0.0)) throw std::domain_error("Lambda must be <= 0");
  const EfimovExponent ex = efimov_exponent(mass, l);
  const double eps2 = mass.eps2();
  const double s0 = lambda * r0 * r0 / eps2;
  const double a = std::atan(2.0 * ex.beta * interior_log_factor(l, s0));

  SpectrumResult res;
  res.l = l;
  res.mass = mass;
  res.potential = PotentialSpec::auxiliary_core(lambda, r0).describe();
  res.tag = "efimov";
  if (count <= 0) return res;

  const double w2 = specfun::omega() * specfun::omega();
  const double v_min = std::min(lambda, -w2 / (r0 * r0));
  const double tau_max = r0 * std::sqrt(-v_min / eps2);
  // E = -eps2 tau^2 / r0^2 must stay above the double-precision floor.
  const double tau_min = r0 * std::sqrt(1e-290 / eps2);
  const double theta_min = theta_of(tau_min, ex);

  auto d_of_theta = [&](double th) { return matching_function(mass, l, r0, lambda, tau_of(th, ex)); };

  double th = theta_of(tau_max, ex) * (1.0 - 1e-15) - 1e-15;
  double d_prev = d_of_theta(th);
  while (static_cast<int>(res.levels.size()) < count) {
    const double tau = tau_of(th, ex);
    const double s = tau * tau + s0;
    const double y = std::sqrt(std::fabs(s));
    double step = std::min(kPi / 64.0, (kPi / 32.0) * std::max(y, 1.0) * ex.beta / (2.0 * tau * tau));
    step = std::max(step, 1e-12 * std::max(1.0, std::fabs(th)));
    const double th_next = th - step;
    if (th_next < theta_min) {
      if (res.levels.empty()) {
        throw BracketFailure("no matching root found for theta in [" + std::to_string(theta_min) +
                             ", " + std::to_string(theta_of(tau_max, ex)) + "]");
      }
      break;
    }
    const double d_next = d_of_theta(th_next);
    if ((d_prev < 0.0) != (d_next < 0.0)) {
      std::uintmax_t iters = 200;
      auto tol = [](double u, double v) {
        return std::fabs(u - v) <= 1e-13 * std::max(1.0, std::fabs(u));
      };
      const auto br = boost::math::tools::toms748_solve(d_of_theta, th_next, th, d_next, d_prev,
                                                        tol, iters);
      const double root = 0.5 * (br.first + br.second);
      const double tau_r = tau_of(root, ex);
      Level lv;
      lv.n = static_cast<int>(res.levels.size()) + 1;
      lv.branch = static_cast<int>(std::lround((a - root) / kPi));
      lv.E = -eps2 * tau_r * tau_r / (r0 * r0);
      lv.residual = std::fabs(d_of_theta(root));
      lv.method = Method::Matching;
      lv.subnormal = std::fabs(lv.E) < DBL_MIN;
      res.levels.push_back(lv);
    }
    th = th_next;
    d_prev = d_next;
  }
  return res;
}

int count_bound_states(const PotentialSpec& potential, const MassConfig& mass, int l,
                       double energy, const RadialOptions& options) {
  const RadialProblem p(potential, mass.eps2(), l, options);
  return p.count_below(energy);
}

SpectrumResult numeric_spectrum(const PotentialSpec& potential, const MassConfig& mass, int l,
                                const NumericOptions& options) {
  check_l(l);
  if (options.first < 1) throw std::domain_error("level index starts at 1");
  const double eps2 = mass.eps2();
  const RadialProblem prob(potential, eps2, l, options.radial);

  SpectrumResult res;
  res.l = l;
  res.mass = mass;
  res.potential = potential.describe();
  res.tag = tag_for(potential);
  if (options.count <= 0) return res;

  const double thr = prob.threshold();
  const double depth = thr - prob.potential_minimum();
  if (!(depth > 0.0)) return res;

  auto energy = [&](double s) { return thr - eps2 * std::exp(2.0 * s); };
  auto count = [&](double s) { return prob.count_below(energy(s)); };

  const auto beta = prob.tail_beta();
  const double stride = beta ? std::min(1.5 * kPi / *beta, 2.0) : 1.0;
  double s_floor = 0.5 * std::log(options.energy_floor / eps2);
  if (thr != 0.0) {
    // Binding energies below a few ulps of the threshold are lost in thr - E.
    s_floor = std::max(s_floor, 0.5 * std::log(64.0 * DBL_EPSILON * std::fabs(thr) / eps2));
  }

  double s_hi = 0.5 * std::log(depth / eps2) + 1e-3;
  int n_hi = count(s_hi);
  for (int i = 0; n_hi > 0 && i < 20; ++i) n_hi = count(s_hi += 0.5);
  if (n_hi > 0) throw GridResolutionError("levels found below the potential minimum");

  const int last = options.first + options.count - 1;
  for (int k = 1; k <= last; ++k) {
    // Walk toward threshold until the k-th level is below E(s_lo).
    double s_lo = s_hi;
    int n_lo = n_hi;
    double idle = 0.0;
    bool exhausted = false;
    while (n_lo < k) {
      const double s_next = s_lo - stride;
      if (s_next < s_floor) {
        if (beta) {
          std::ostringstream os;
          os << "level " << k << " lies above E = -" << options.energy_floor
             << ", below double-precision reach";
          throw PrecisionFloorError(os.str());
        }
        exhausted = true;
        break;
      }
      const int n_next = count(s_next);
      idle = n_next == n_lo ? idle + stride : 0.0;
      if (!beta && idle > 40.0) {
        exhausted = true;
        break;
      }
      if (n_next < k) {
        s_hi = s_next;
        n_hi = n_next;
      }
      s_lo = s_next;
      n_lo = n_next;
    }
    if (exhausted) break;

    while (!(n_lo == k && n_hi == k - 1)) {
      if (s_hi - s_lo < 1e-9 * std::max(1.0, std::fabs(s_hi))) {
        throw GridResolutionError("cannot separate level " + std::to_string(k) +
                                  " from its neighbour by node count near E = " +
                                  std::to_string(energy(s_lo)));
      }
      const double mid = 0.5 * (s_lo + s_hi);
      const int n_mid = count(mid);
      if (n_mid >= k) {
        s_lo = mid;
        n_lo = n_mid;
      } else {
        s_hi = mid;
        n_hi = n_mid;
      }
    }

    const double s_root_guess = 0.5 * (s_lo + s_hi);
    double s_star = s_root_guess;
    if (k >= options.first) {
      const RadialGrid grid = prob.grid_for(energy(s_root_guess), energy(s_lo));
      auto g = [&](double s) { return prob.shoot(energy(s), grid).mismatch(k); };
      const double g_lo = g(s_lo);
      const double g_hi = g(s_hi);
      if (!(g_lo > 0.0) || !(g_hi < 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "level " << k << ": mismatch does not change sign on s in [" << s_lo << ", " << s_hi
           << "] (values " << g_lo << ", " << g_hi << ")";
        throw BracketFailure(os.str());
      }
      std::uintmax_t iters = 200;
      const double tol_s = options.s_tolerance;
      auto tol = [tol_s](double u, double v) { return std::fabs(u - v) <= tol_s; };
      const auto br = boost::math::tools::toms748_solve(g, s_lo, s_hi, g_lo, g_hi, tol, iters);
      s_star = 0.5 * (br.first + br.second);
      const ShootState st = prob.shoot(energy(s_star), grid);
      Level lv;
      lv.n = k;
      lv.E = energy(s_star);
      lv.nodes = st.nodes();
      lv.residual = st.residual();
      lv.method = Method::Numeric;
      lv.subnormal = std::fabs(lv.E - thr) < DBL_MIN;
      res.levels.push_back(lv);
    }
    // Next search starts just on the shallow side of this level.
    s_hi = s_star - 1e-6;
    n_hi = k;
  }
  return res;
}

// ---- Wave functions ------------------------------------------------------

EfimovWavefunction::EfimovWavefunction(const MassConfig& mass, int l, double energy, double r0,
                                       double lambda)
    : l_(l), eps2_(mass.eps2()), energy_(energy), r0_(r0), lambda_(lambda) {
  check_l(l);
  if (!(energy < 0.0)) throw std::domain_error("bound-state energy must be < 0");
  if (!(r0 > 0.0) || !(lambda <= 0.0)) throw std::domain_error("need r0 > 0 and Lambda <= 0");
  kappa_ = std::sqrt(-energy / eps2_);
  beta_ = efimov_exponent(mass, l).beta;
  s0_coeff_ = (lambda - energy) / eps2_;
  const double s_r0 = s0_coeff_ * r0 * r0;
  inner_scale_ = interior_scaled(l, s_r0);
  outer_scale_ = specfun::bessel_k_imag_series(beta_, kappa_ * r0).value;

  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  auto sq = [this](double r) {
    const double u = unnormalized(r);
    return u * u;
  };
  double total = GK::integrate(sq, 0.0, r0, 15, 1e-12);
  const double x0 = std::log(r0);
  const double x1 = std::log(r0 + 40.0 / kappa_);
  const double piece = 0.5 * kPi / beta_;
  const int pieces = std::max(1, static_cast<int>(std::ceil((x1 - x0) / piece)));
  const double dx = (x1 - x0) / pieces;
  auto sq_log = [&](double x) {
    const double r = std::exp(x);
    return r * sq(r);
  };
  for (int i = 0; i < pieces; ++i) {
    total += GK::integrate(sq_log, x0 + i * dx, x0 + (i + 1) * dx, 15, 1e-12);
  }
  norm_ = 1.0 / std::sqrt(total);
}

double EfimovWavefunction::unnormalized(double r) const {
  if (!(r >= 0.0)) throw std::domain_error("r must be >= 0");
  if (r == 0.0) return 0.0;
  if (r <= r0_) {
    const double s = s0_coeff_ * r * r;
    double v = std::pow(r / r0_, l_ + 1) * interior_scaled(l_, s) / inner_scale_;
    if (s > 0.0) v *= std::exp(std::sqrt(s) - std::sqrt(s0_coeff_) * r0_);
    return v;
  }
  return std::sqrt(r / r0_) * specfun::bessel_k_imag_series(beta_, kappa_ * r).value /
         outer_scale_;
}

double EfimovWavefunction::unnormalized_derivative(double r) const {
  if (r <= r0_) {
    const double s = s0_coeff_ * r * r;
    const double ru = interior_pair(l_, s).first;
    double scale = std::pow(r / r0_, l_ + 1) / inner_scale_ / r;
    if (s > 0.0) scale *= std::exp(std::sqrt(s) - std::sqrt(s0_coeff_) * r0_);
    return scale * ru;
  }
  const auto k = specfun::bessel_k_imag_series(beta_, kappa_ * r);
  return std::sqrt(r / r0_) * (0.5 * k.value / r + kappa_ * k.derivative) / outer_scale_;
}

double EfimovWavefunction::operator()(double r) const { return norm_ * unnormalized(r); }

double EfimovWavefunction::reduced(double r) const { return (*this)(r) / std::sqrt(r); }

double EfimovWavefunction::derivative(double r) const {
  return norm_ * unnormalized_derivative(r);
}

int EfimovWavefunction::node_count() const {
  const double x0 = std::log(r0_ * 1e-6);
  const double x1 = std::log(r0_ + 40.0 / kappa_);
  const double h = std::min(2e-3, kPi / (64.0 * beta_));
  int nodes = 0;
  double prev = unnormalized(std::exp(x0));
  for (double x = x0 + h; x <= x1; x += h) {
    const double v = unnormalized(std::exp(x));
    if ((v < 0.0) != (prev < 0.0)) ++nodes;
    prev = v;
  }
  return nodes;
}

// ---- Truncation and deviation ------------------------------------------

UlamDeviation ulam_deviation_between(const PotentialSpec& a, const PotentialSpec& b,
                                     const MassConfig& mass, int l, double eta, double r_max,
                                     double step) {
  check_l(l);
  if (!(eta > 0.0) || !(r_max > 0.0) || !(step > 0.0)) {
    throw std::domain_error("eta, r_max and step must be > 0");
  }
  const double eps2 = mass.eps2();
  const double energy = -eps2 * eta * eta;
  const double r_in = 1e-6 * r_max;
  const int n = static_cast<int>(std::ceil(std::log(r_max / r_in) / step));
  std::vector<double> r(n + 1);
  for (int i = 0; i <= n; ++i) r[i] = i == n ? r_max : r_max * std::exp(-(n - i) * step);

  auto start = [&](double x) { return std::sqrt(eta * x) * specfun::bessel_i_half(l, eta * x); };
  const double u0 = start(r[0]);
  const double u1 = start(r[1]);
  const auto fa = integrate_outward([&](double x) { return a(x); }, eps2, l, energy, r, u0, u1);
  const auto fb = integrate_outward([&](double x) { return b(x); }, eps2, l, energy, r, u0, u1);

  UlamDeviation out{0.0, 0.0, r[0]};
  for (int i = 0; i <= n; ++i) {
    const double d = std::fabs(fa[i] - fb[i]);
    const double ratio = d / std::pow(eta * r[i], l + 1);
    if (ratio > out.sup_ratio) {
      out.sup_ratio = ratio;
      out.r_at_sup = r[i];
    }
    out.sup_abs = std::max(out.sup_abs, d);
  }
  return out;
}

UlamDeviation ulam_deviation(const MassConfig& mass, int l, double eta, int k, double step) {
  const double rk = truncation_radius(k);
  return ulam_deviation_between(PotentialSpec::truncated(k), PotentialSpec::auxiliary_core(0.0, rk),
                                mass, l, eta, rk, step);
}

// ---- Non-Efimov condition ------------------------------------------------

PotentialMinimum find_potential_minimum(double t_theta) {
  const double r_hi = 3.0 * universal_core_radius();
  auto v = [t_theta](double r) { return two_center::effective_eigenvalue(t_theta, r); };
  const double h = 1e-2;
  double best_r = h;
  double best_v = v(h);
  for (double r = 2.0 * h; r <= r_hi; r += h) {
    const double vr = v(r);
    if (vr < best_v) {
      best_v = vr;
      best_r = r;
    }
  }
  const double lo = std::max(best_r - h, 0.5 * h);
  const double hi = std::min(best_r + h, r_hi);
  std::uintmax_t iters = 200;
  const auto m = boost::math::tools::brent_find_minima(v, lo, hi, 40, iters);
  return {m.first, m.second};
}

double non_efimov_bound(int l) {
  check_l(l);
  const PotentialMinimum pm = find_potential_minimum(1.0);
  const double c = 2.0 * specfun::bessel_j_first_zero(l) / (3.0 * kPi);
  return c * c / std::fabs(pm.depth) - 0.125;
}

}  // namespace efimov::spectrum
