#include "acceptance.hpp"

#include "efimov/off_unitarity.hpp"
#include "efimov/specfun.hpp"
#include "efimov/spectrum.hpp"
#include "efimov/two_center.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace efimov::acceptance {

namespace {

namespace sp = efimov::spectrum;
namespace tc = efimov::two_center;
namespace sf = efimov::specfun;
namespace ou = efimov::off_unitarity;

constexpr double kSqrt2 = 1.41421356237309504880168872420969808;

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct Outcome {
  bool passed;
  std::string measured;
  std::string tolerance;
};

Outcome critical_mass() {
  const double v = sp::critical_mass(1);
  return {std::fabs(v - 13.4902) <= 1e-3, "M1* = " + fmt("%.6f", v), "|M1* - 13.4902| <= 1e-3"};
}

Outcome non_efimov() {
  const double b0 = sp::non_efimov_bound(0);
  const double b1 = sp::non_efimov_bound(1);
  const bool ok = std::fabs(b0 - 11.24) <= 0.05 && std::fabs(b1 - 23.12) <= 0.05;
  return {ok, "l=0: " + fmt("%.4f", b0) + ", l=1: " + fmt("%.4f", b1),
          "within 0.05 of 11.24 and 23.12 (depth read as lambda_1(r_min))"};
}

Outcome spatial_size() {
  std::string m;
  bool ok = true;
  for (double t : {0.5, 0.9, 0.99}) {
    const auto s = ou::spatial_size(t);
    ok = ok && std::fabs(s.ratio - 2.80) <= 0.01;
    m += "t=" + fmt("%g", t) + ": S/a0=" + fmt("%.5f", s.ratio) + " (exact-branch crossing " +
         fmt("%.4f", s.crossing_ratio) + ") ";
  }
  return {ok, m, "S/a0 = 2.80 +- 0.01"};
}

Outcome bargmann() {
  const auto rep = ou::bargmann_bound(0.9, 0, 2.8);
  const double s0 = rep.segments[0].value;
  const double s1 = rep.segments[1].value;
  const double s2 = rep.segments[2].value;
  const bool ok = std::fabs(s1 - 0.5308) <= 1e-3 && std::fabs(s2 - 0.1184) <= 1e-3 &&
                  std::fabs(s0 - 1.1042) <= 1e-3;
  const auto solved = ou::bargmann_bound(0.9, 0);
  return {ok,
          "(a0,S]=" + fmt("%.4f", s1) + " (S,inf)=" + fmt("%.4f", s2) + " [0,a0]@t=0.9=" +
              fmt("%.4f", s0) + "; at solved S/a0: " + fmt("%.4f", solved.segments[1].value) +
              ", " + fmt("%.4f", solved.segments[2].value),
          "each within 1e-3 of 0.5308, 0.1184, 1.1042 (S = 2.8 a0)"};
}

Outcome geometric_law() {
  const auto mass = sp::MassConfig::from_ratio(20.0);
  const double law = std::exp(2.0 * sf::kPi / sp::efimov_exponent(mass, 0).beta);
  sp::NumericOptions opt;
  opt.first = 1;
  opt.count = 7;
  const auto res = sp::numeric_spectrum(sp::PotentialSpec::nonlocal_unitary(), mass, 0, opt);
  std::vector<double> dev;
  for (std::size_t i = 0; i + 1 < res.levels.size(); ++i) {
    dev.push_back(std::fabs(res.levels[i].E / res.levels[i + 1].E / law - 1.0));
  }
  // The ground state is set by the short-range part of the potential; the
  // ladder proper starts at the first excited level (levels 2..7).
  bool ok = res.levels.size() == 7;
  std::string m = "ground ratio dev " + fmt("%.2e", dev.empty() ? NAN : dev[0]) + "; ladder devs";
  for (std::size_t i = 1; i < dev.size(); ++i) {
    ok = ok && dev[i] <= 0.01 && dev[i] < dev[i - 1];
    m += " " + fmt("%.2e", dev[i]);
  }
  return {ok, m, "levels 2..7: |ratio/e^{2pi/beta} - 1| <= 1e-2, decreasing in n"};
}

Outcome oracle_equivalence() {
  const auto mass = sp::MassConfig::from_ratio(50.0);
  const double eps2 = mass.eps2();
  double worst = 0.0;
  int checked = 0;
  for (int l = 0; l <= 2; ++l) {
    for (double c : {0.0, -5.0, -20.0}) {
      for (double r0 : {1.0, sp::universal_core_radius(), 6.0}) {
        const double lambda = c * eps2 / (r0 * r0);
        const auto m = sp::matching_levels(mass, l, 3, r0, lambda);
        sp::NumericOptions opt;
        opt.count = 3;
        const auto n = sp::numeric_spectrum(sp::PotentialSpec::auxiliary_core(lambda, r0), mass, l,
                                            opt);
        if (m.levels.size() != 3 || n.levels.size() != 3) return {false, "missing levels", ""};
        for (int i = 0; i < 3; ++i) {
          worst = std::max(worst, std::fabs(n.levels[i].E / m.levels[i].E - 1.0));
          ++checked;
        }
      }
    }
  }
  return {worst <= 1e-6, std::to_string(checked) + " levels, worst rel. diff " + fmt("%.2e", worst),
          "<= 1e-6 (M/m=50, Lambda r0^2/eps2 in {0,-5,-20}, r0 in {1, 3.33, 6})"};
}

Outcome closed_form() {
  double worst_det = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double r = 1e-3 * std::pow(5e4, i / 49.0);
    for (int j = 0; j < 20; ++j) {
      const double t = -3.0 + 4.0 * j / 19.0;
      const double lam = -tc::effective_eigenvalue(t, r);
      const auto g = tc::gamma_matrix(tc::Sector::Bosonic, t, lam, r);
      worst_det = std::max(worst_det, std::fabs(g.determinant()) / g.scale());
    }
  }
  double worst_small = 0.0;
  double worst_large = 0.0;
  for (double t : {-1.0, 0.0, 0.5}) {
    const double small = kSqrt2 / (1.0 - t);
    const double large = 2.0 * kSqrt2 / (1.0 - t);
    worst_small = std::max(
        worst_small, std::fabs(tc::scattering_length(tc::Sector::Bosonic, t, 1e-6).value / small - 1.0));
    worst_large = std::max(
        worst_large, std::fabs(tc::scattering_length(tc::Sector::Bosonic, t, 1e3).value / large - 1.0));
  }
  const bool ok = worst_det <= 1e-10 && worst_small <= 1e-6 && worst_large <= 1e-6;
  return {ok,
          "det/scale " + fmt("%.1e", worst_det) + "; a(1e-6) dev " + fmt("%.1e", worst_small) +
              "; a(1e3) dev " + fmt("%.1e", worst_large) +
              " (approach to 2sqrt2/(1-t) is O(1/r): sqrt2/(r(1-t)))",
          "det <= 1e-10 on 50x20 (r,t); limits to 1e-6 at r=1e-6 and r=1e3"};
}

Outcome special_functions() {
  double w_err = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double x = i == 0 ? -std::exp(-1.0) : -std::exp(-1.0) + std::pow(10.0, -8.0 + 0.045 * i);
    const double w = sf::lambert_w0(x);
    w_err = std::max(w_err, std::fabs(w * std::exp(w) - x) / std::max(std::fabs(x), 1e-300));
  }
  double k_err = 0.0;
  for (double beta : {0.1, 0.5, 1.0, 1.7455, 3.0, 5.0}) {
    const double c = std::sqrt(sf::kPi / (beta * std::sinh(sf::kPi * beta)));
    for (double x : {1e-3, 0.01, 0.1, 0.5, 1.0, 1.9, 2.1, 4.0, 10.0, 25.0}) {
      const auto a = sf::bessel_k_imag(beta, x);
      const auto b = sf::bessel_k_imag_series(beta, x);
      // Inside the oscillatory zone K has zeros; compare on the amplitude scale.
      const double scale = x < beta ? c : std::fabs(b.value);
      k_err = std::max(k_err, std::fabs(a.value - b.value) / scale);
    }
  }
  double small_err = 0.0;
  for (double beta : {0.5, 1.0, 1.7455, 3.0}) {
    const double x = 1e-4;
    const double c = std::sqrt(sf::kPi / (beta * std::sinh(sf::kPi * beta)));
    const double law = -c * std::sin(beta * std::log(0.5 * x) - sf::gamma_phase(beta));
    small_err = std::max(small_err, std::fabs(sf::bessel_k_imag_series(beta, x).value - law) / c);
  }
  double rec_err = 0.0;
  for (double x : {0.01, 0.3, 1.0, 5.0, 19.9, 20.1, 60.0}) {
    for (int l = 1; l <= 10; ++l) {
      const double nu = l + 0.5;
      const double lhs = sf::bessel_i_half_scaled(l - 1, x) - sf::bessel_i_half_scaled(l + 1, x);
      const double rhs = 2.0 * nu / x * sf::bessel_i_half_scaled(l, x);
      rec_err = std::max(rec_err, std::fabs(lhs - rhs) / std::fabs(rhs));
    }
  }
  const bool ok = w_err <= 1e-13 && k_err <= 1e-8 && small_err <= 1e-6 && rec_err <= 1e-10;
  return {ok,
          "W e^W=x " + fmt("%.1e", w_err) + "; K dual " + fmt("%.1e", k_err) + "; small-x law " +
              fmt("%.1e", small_err) + "; I recurrence " + fmt("%.1e", rec_err),
          "W 1e-13, K 1e-8, law 1e-6 at x=1e-4, recurrence 1e-10"};
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome asymptotics() {
  const double w2 = sf::omega() * sf::omega();
  // Tail: sample where the oscillation envelope peaks, x = r/sqrt2 = pi/4 + k pi,
  // and fit ln(r^2 |V + W^2/r^2|) against r.
  std::vector<double> xs;
  std::vector<double> ys;
  for (int k = 2; k < 10; ++k) {
    const double r = kSqrt2 * (0.25 * sf::kPi + k * sf::kPi);
    if (r < 10.0 || r > 40.0) continue;
    const double d = std::fabs(tc::effective_eigenvalue(1.0, r) + w2 / (r * r));
    xs.push_back(r);
    ys.push_back(std::log(d * r * r));
  }
  const double slope = fit_slope(xs, ys);
  const double rate_err = std::fabs(slope * kSqrt2 + 1.0);

  // Origin: C'(r) = |V + r^2/16| / r^3 settles to a constant.
  double cmin = 1e300;
  double cmax = 0.0;
  for (double r = 1e-3; r <= 0.1; r *= 1.2) {
    const double c = std::fabs(tc::effective_eigenvalue(1.0, r) + r * r / 16.0) / (r * r * r);
    cmin = std::min(cmin, c);
    cmax = std::max(cmax, c);
  }
  // Plateau for t < 1. Near 0 the gap is linear in r. At large r it decays
  // like e^{-c r}/r with c = min(1, 1 - t)/sqrt2: the oscillation g gives
  // e^{-r/sqrt2}, the Lambert-W correction e^{-(1-t) r/sqrt2}, and for
  // 0 < t < 1 the latter dominates.
  const double t = 0.5;
  const double plateau = -0.5 * (1.0 - t) * (1.0 - t);
  auto gap = [&](double r) { return std::fabs(tc::effective_eigenvalue(t, r) - plateau); };
  const double lin_lo = gap(1e-6) / 1e-6;
  const double lin_hi = gap(1e-4) / 1e-4;
  const double lin_spread = std::max(lin_lo, lin_hi) / std::min(lin_lo, lin_hi);
  xs.clear();
  ys.clear();
  for (double r = 20.0; r <= 60.0; r += 2.0) {
    xs.push_back(r);
    ys.push_back(std::log(gap(r) * r));
  }
  const double plateau_slope = fit_slope(xs, ys);
  const double plateau_rate = std::min(1.0, 1.0 - t) / kSqrt2;
  const double plateau_err = std::fabs(-plateau_slope / plateau_rate - 1.0);
  const bool ok = rate_err <= 0.02 && cmax / cmin <= 2.0 && lin_spread <= 1.1 && plateau_err <= 0.02;
  return {ok,
          "tail decay rate " + fmt("%.5f", -slope) + " (1/sqrt2 = 0.70711); r^3 coefficient in [" +
              fmt("%.4f", cmin) + ", " + fmt("%.4f", cmax) + "]; t=0.5 plateau: gap/r " +
              fmt("%.4f", lin_lo) + " vs " + fmt("%.4f", lin_hi) + ", decay rate " +
              fmt("%.5f", -plateau_slope) + " (expected " + fmt("%.5f", plateau_rate) + ")",
          "tail rate within 2%, C' spread <= 2x, plateau gap linear at 0 and decay rate within 2%"};
}

Outcome ulam() {
  const auto mass = sp::MassConfig::from_ratio(20.0);
  bool ok = true;
  std::string m;
  for (int l : {0, 1}) {
    std::vector<double> c;
    for (double eta : {0.03, 0.015, 0.0075}) c.push_back(sp::ulam_deviation(mass, l, eta).sup_ratio);
    const double hi = *std::max_element(c.begin(), c.end());
    const double lo = *std::min_element(c.begin(), c.end());
    ok = ok && std::isfinite(hi) && lo > 0.0 && hi / lo <= 2.0;
    m += "l=" + std::to_string(l) + ": C=" + fmt("%.5f", c[0]) + "," + fmt("%.5f", c[1]) + "," +
         fmt("%.5f", c[2]) + " ";
  }
  return {ok, m, "sup|f-f0|/(eta r)^{l+1} within a factor 2 across eta, eta/2, eta/4 (k=1, M/m=20)"};
}

using Runner = Outcome (*)();

struct Entry {
  CriterionInfo info;
  Runner run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {{1, "critical_mass", "critical mass l=1", 1e-3}, critical_mass},
      {{2, "non_efimov", "non-Efimov thresholds", 1.0}, non_efimov},
      {{3, "spatial_size", "spatial size S/a0", 1.0}, spatial_size},
      {{4, "bargmann", "Bargmann segments", 5.0}, bargmann},
      {{5, "geometric_law", "geometric law, full potential", 60.0}, geometric_law},
      {{6, "oracle_equivalence", "matching vs Numerov, 3x3x3", 120.0}, oracle_equivalence},
      {{7, "closed_form", "closed-form consistency", 1.0}, closed_form},
      {{8, "special_functions", "special-function properties", 10.0}, special_functions},
      {{9, "asymptotics", "effective-potential asymptotics", 1.0}, asymptotics},
      {{10, "ulam", "Ulam deviation boundedness", 30.0}, ulam},
  };
  return e;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> c = [] {
    std::vector<CriterionInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return c;
}

CriterionResult run_criterion(int id) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    CriterionResult r;
    r.id = id;
    r.key = e.info.key;
    r.title = e.info.title;
    r.budget_seconds = e.info.budget_seconds;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, "", ""};
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what(), ""};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = o.passed && r.seconds <= r.budget_seconds;
    r.measured = o.measured;
    r.tolerance = o.tolerance;
    return r;
  }
  throw std::invalid_argument("unknown acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run(const std::vector<std::string>& only) {
  std::vector<int> ids;
  if (only.empty()) {
    for (const auto& c : criteria()) ids.push_back(c.id);
  } else {
    for (const auto& sel : only) {
      bool found = false;
      for (const auto& c : criteria()) {
        if (sel == c.key || sel == std::to_string(c.id)) {
          if (std::find(ids.begin(), ids.end(), c.id) == ids.end()) ids.push_back(c.id);
          found = true;
        }
      }
      if (!found) throw std::invalid_argument("unknown acceptance criterion '" + sel + "'");
    }
    std::sort(ids.begin(), ids.end());
  }
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.key << ": " << r.measured
     << " | required: " << r.tolerance;
  char buf[96];
  std::snprintf(buf, sizeof buf, " | %.3g s (budget %.3g s)", r.seconds, r.budget_seconds);
  os << buf;
  return os.str();
}

}  // namespace efimov::acceptance
