#include "efimov/radial.hpp"

#include "efimov/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace efimov::spectrum {

namespace {

constexpr double kRescale = 1e200;
constexpr double kCoarseStep = 0.01;

struct Edge {
  int nodes = 0;
  double psi = 0.0;
};

double fold(double psi) {
  if (psi < 0.0) psi += specfun::kPi;
  if (psi >= specfun::kPi) psi -= specfun::kPi;
  return psi;
}

// Integrates w'' = Q w across q (uniform step h) starting from w[0], w[1],
// and returns the node count and the Pruefer angle at the last node. The
// derivative there is a one-sided O(h^4) expansion that only uses values
// on this side, so a jump in Q at the final node does no harm.
Edge sweep(const std::vector<double>& q, double h, double w0, double w1) {
  const std::size_t n = q.size();
  const double h12 = h * h / 12.0;
  double a = w0;  // w_{i-1}
  double b = w1;  // w_i
  double c = 0.0;
  int nodes = (a < 0.0) != (b < 0.0) ? 1 : 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (h12 * q[i + 1] > 0.5) {
      // Past the Numerov stability limit the recurrence flips sign every
      // step. The solution there is deep under the barrier and simply grows.
      c = b * std::exp(std::min(h * std::sqrt(q[i + 1]), 50.0));
    } else {
      c = ((2.0 + 10.0 * h12 * q[i]) * b - (1.0 - h12 * q[i - 1]) * a) / (1.0 - h12 * q[i + 1]);
    }
    if ((c < 0.0) != (b < 0.0)) ++nodes;
    a = b;
    b = c;
    if (std::fabs(b) > kRescale) {
      a /= kRescale;
      b /= kRescale;
    }
  }
  // a = w_{n-2}, b = w_{n-1}; rebuild w_{n-3} by running the recurrence
  // backwards, which is exact up to rounding.
  const std::size_t m = n - 1;
  const double wm2 = ((2.0 + 10.0 * h12 * q[m - 1]) * a - (1.0 - h12 * q[m]) * b) /
                     (1.0 - h12 * q[m - 2]);
  const double f0 = q[m] * b;
  const double f1 = q[m - 1] * a;
  const double f2 = q[m - 2] * wm2;
  const double d3 = (3.0 * f0 - 4.0 * f1 + f2) / (2.0 * h);
  const double d4 = (f0 - 2.0 * f1 + f2) / (h * h);
  const double dw = ((b - a) + 0.5 * h * h * f0 - h * h * h / 6.0 * d3 + h * h * h * h / 24.0 * d4) / h;
  return {nodes, fold(std::atan2(b, dw))};
}

}  // namespace

double ShootState::mismatch(int k) const {
  return (nodes_left + nodes_right - (k - 1)) * specfun::kPi + psi_left - psi_right;
}

double ShootState::residual() const { return std::fabs(std::sin(psi_left - psi_right)); }

int ShootState::nodes() const {
  const double d = psi_left - psi_right;
  const double half = 0.5 * specfun::kPi;
  return nodes_left + nodes_right + (d > half ? 1 : 0) - (d < -half ? 1 : 0);
}

RadialProblem::RadialProblem(PotentialSpec potential, double eps2, int l, RadialOptions options)
    : potential_(std::move(potential)), eps2_(eps2), l_(l), options_(options) {
  if (!potential_.bounded_below()) {
    throw std::domain_error(potential_.describe() + " is not bounded below; no radial spectrum");
  }
  if (!(eps2_ > 0.0)) throw std::domain_error("eps2 must be > 0");
  if (l_ < 0) throw std::domain_error("l must be >= 0");
  if (!(options_.step > 0.0) || !(options_.r_in_factor > 0.0) || !(options_.tail_argument > 0.0)) {
    throw std::domain_error("radial options must be positive");
  }
  r_in_ = options_.r_in_factor * potential_.reference_length();
  v_min_ = std::numeric_limits<double>::infinity();
  const double x_hi = std::log(1e4 * potential_.reference_length());
  for (double x = std::log(r_in_); x <= x_hi; x += kCoarseStep) {
    v_min_ = std::min(v_min_, potential_(std::exp(x)));
  }
  if (const auto bp = potential_.breakpoint()) {
    v_min_ = std::min({v_min_, potential_.inner(*bp), potential_.outer(*bp)});
  }
}

std::optional<double> RadialProblem::tail_beta() const {
  if (!potential_.inverse_square_tail()) return std::nullopt;
  const double nu = l_ + 0.5;
  const double b2 = potential_.tail_coefficient() / eps2_ - nu * nu;
  if (!(b2 > 0.0)) return std::nullopt;
  return std::sqrt(b2);
}

double RadialProblem::potential_at(double r, bool outer_side) const {
  const auto bp = potential_.breakpoint();
  if (bp && (r > *bp || (r == *bp && outer_side))) return potential_.outer(r);
  return potential_.inner(r);
}

std::optional<double> RadialProblem::outer_turning_point(double energy) const {
  const double thr = threshold();
  if (!(energy < thr)) throw std::domain_error("energy must lie below the threshold");
  const double kappa = std::sqrt((thr - energy) / eps2_);
  const double nu2 = (l_ + 0.5) * (l_ + 0.5);
  const double x_lo = std::log(r_in_);
  const double x_hi = std::log(1e3 * potential_.reference_length() + 200.0 / kappa);
  auto q = [&](double r) { return nu2 + r * r * (potential_(r) - energy) / eps2_; };
  std::optional<double> tp;
  double r_prev = std::exp(x_lo);
  double q_prev = q(r_prev);
  for (double x = x_lo + kCoarseStep; x <= x_hi; x += kCoarseStep) {
    const double r = std::exp(x);
    const double qr = q(r);
    if (q_prev < 0.0 && qr >= 0.0) {
      // Bisection is enough here; the match point only has to be somewhere
      // near the turning point.
      double a = r_prev;
      double b = r;
      for (int i = 0; i < 40; ++i) {
        const double m = std::sqrt(a * b);
        if (q(m) < 0.0) a = m; else b = m;
      }
      tp = std::sqrt(a * b);
    }
    r_prev = r;
    q_prev = qr;
  }
  return tp;
}

RadialGrid RadialProblem::grid_for(double e_match, double e_outer) const {
  const double thr = threshold();
  if (!(e_match < thr) || !(e_outer < thr)) {
    throw std::domain_error("grid energies must lie below the threshold");
  }
  const double h = options_.step;
  const double nu2 = (l_ + 0.5) * (l_ + 0.5);

  double r_m = 0.0;
  if (const auto bp = potential_.breakpoint()) {
    r_m = *bp;
  } else if (const auto tp = outer_turning_point(e_match)) {
    r_m = *tp;
  } else {
    // Forbidden everywhere: match where Q is smallest.
    const double kappa = std::sqrt((thr - e_match) / eps2_);
    const double x_hi = std::log(1e3 * potential_.reference_length() + 200.0 / kappa);
    double best = std::numeric_limits<double>::infinity();
    for (double x = std::log(r_in_); x <= x_hi; x += kCoarseStep) {
      const double r = std::exp(x);
      const double qr = nu2 + r * r * (potential_(r) - e_match) / eps2_;
      if (qr < best) {
        best = qr;
        r_m = r;
      }
    }
  }
  r_m = std::max(r_m, r_in_ * std::exp(4.0 * h));

  const double kappa_o = std::sqrt((thr - e_outer) / eps2_);
  const double r_t = std::max(outer_turning_point(e_outer).value_or(r_m), r_m);
  double r_out = r_t + options_.tail_argument / kappa_o;
  // Keep h^2 Q well inside the Numerov stability limit.
  r_out = std::min(r_out, std::max(2.4 / (kappa_o * h), r_t * std::exp(4.0 * h)));

  RadialGrid g;
  g.h = h;
  const double x_m = std::log(r_m);
  const int n_left = std::max(3, static_cast<int>(std::ceil((x_m - std::log(r_in_)) / h)));
  const int n_right = std::max(3, static_cast<int>(std::ceil((std::log(r_out) - x_m) / h)));
  g.r_left.resize(n_left + 1);
  g.v_left.resize(n_left + 1);
  for (int i = 0; i <= n_left; ++i) {
    const double r = i == n_left ? r_m : std::exp(x_m - (n_left - i) * h);
    g.r_left[i] = r;
    g.v_left[i] = potential_at(r, false);
  }
  g.r_right.resize(n_right + 1);
  g.v_right.resize(n_right + 1);
  for (int i = 0; i <= n_right; ++i) {
    const double r = i == 0 ? r_m : std::exp(x_m + i * h);
    g.r_right[i] = r;
    g.v_right[i] = potential_at(r, true);
  }
  return g;
}

ShootState RadialProblem::shoot(double energy, const RadialGrid& grid) const {
  const double nu2 = (l_ + 0.5) * (l_ + 0.5);
  const double h = grid.h;

  std::vector<double> q(grid.r_left.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double r = grid.r_left[i];
    q[i] = nu2 + r * r * (grid.v_left[i] - energy) / eps2_;
  }
  // Regular start: w ~ r^{l + 1/2}, i.e. growth exp(sqrt(Q) h) per step.
  const double g0 =
      std::exp(std::min(h * std::sqrt(std::max(0.5 * (q[0] + q[1]), 0.0)), 50.0));
  const Edge left = sweep(q, h, 1.0, g0);

  // The right half is swept from r_out inward, which is the same recurrence
  // on the reversed array; the derivative then comes out with the opposite
  // sign.
  const std::size_t nr = grid.r_right.size();
  q.assign(nr, 0.0);
  for (std::size_t i = 0; i < nr; ++i) {
    const double r = grid.r_right[nr - 1 - i];
    q[i] = nu2 + r * r * (grid.v_right[nr - 1 - i] - energy) / eps2_;
  }
  const double g1 =
      std::exp(std::min(h * std::sqrt(std::max(0.5 * (q[0] + q[1]), 0.0)), 50.0));
  Edge right = sweep(q, h, 1.0, g1);
  right.psi = fold(specfun::kPi - right.psi);

  ShootState s;
  s.nodes_left = left.nodes;
  s.nodes_right = right.nodes;
  s.psi_left = left.psi;
  s.psi_right = right.psi;
  return s;
}

int RadialProblem::count_below(double energy) const {
  return shoot(energy, grid_for(energy, energy)).count();
}

std::vector<double> integrate_outward(const std::function<double(double)>& potential,
                                      double eps2, int l, double energy,
                                      const std::vector<double>& r, double u0, double u1) {
  const std::size_t n = r.size();
  if (n < 2) throw std::domain_error("integrate_outward needs at least two nodes");
  const double h = std::log(r[1] / r[0]);
  const double h12 = h * h / 12.0;
  const double nu2 = (l + 0.5) * (l + 0.5);
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = nu2 + r[i] * r[i] * (potential(r[i]) - energy) / eps2;
  }
  std::vector<double> w(n);
  w[0] = u0 / std::sqrt(r[0]);
  w[1] = u1 / std::sqrt(r[1]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    w[i + 1] = ((2.0 + 10.0 * h12 * q[i]) * w[i] - (1.0 - h12 * q[i - 1]) * w[i - 1]) /
               (1.0 - h12 * q[i + 1]);
  }
  for (std::size_t i = 0; i < n; ++i) w[i] *= std::sqrt(r[i]);
  return w;
}

}  // namespace efimov::spectrum
