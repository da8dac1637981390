#include "commands.hpp"

#include "efimov/errors.hpp"
#include "efimov/off_unitarity.hpp"
#include "efimov/specfun.hpp"
#include "efimov/spectrum.hpp"

#include <cmath>
#include <limits>

namespace efimov::cli {

namespace {

namespace sp = efimov::spectrum;
namespace tc = efimov::two_center;
namespace ou = efimov::off_unitarity;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> linear_grid(const RunConfig& c, double lo_default, double hi_default) {
  const double lo = c.r_min.value_or(lo_default);
  const double hi = c.r_max.value_or(hi_default);
  if (c.points < 1) throw UsageError("--points must be >= 1");
  if (!(lo > 0.0) || !(hi >= lo)) throw UsageError("need 0 < rmin <= rmax");
  if (c.points == 1) return {lo};
  std::vector<double> r(c.points);
  for (int i = 0; i < c.points; ++i) r[i] = lo + (hi - lo) * i / (c.points - 1);
  return r;
}

double checked_t(const RunConfig& c, double fallback, bool allow_one) {
  const double t = c.t_theta.value_or(fallback);
  if (!(t <= 1.0)) throw UsageError("--t-theta must be <= 1");
  if (!allow_one && t == 1.0) throw UsageError("this command needs --t-theta < 1");
  return t;
}

void check_l(int l) {
  if (l < 0 || l > 11) throw UsageError("--l must lie in [0, 11]");
}

template <class F>
double or_nan(F&& f) {
  try {
    return f();
  } catch (const std::domain_error&) {
    return kNaN;
  }
}

void add_grid_parameters(Table& t, const std::vector<double>& r, int points) {
  t.add_parameter("rmin", r.front());
  t.add_parameter("rmax", r.back());
  t.add_parameter("points", std::to_string(points));
}

}  // namespace

Table cmd_potential(const RunConfig& c) {
  const double t = checked_t(c, 1.0, true);
  const double alpha = c.alpha.value_or(tc::alpha_from_t(t));
  const auto r = linear_grid(c, 0.05, 20.0);
  Table out;
  out.command = "potential";
  out.add_parameter("t_theta", t);
  out.add_parameter("alpha", alpha);
  add_grid_parameters(out, r, c.points);
  out.columns = {"r", "V_theta", "V_local", "V_shifted", "V_glued"};
  for (double x : r) {
    out.add_row({x, tc::effective_eigenvalue(t, x), tc::local_effective_eigenvalue(alpha, x),
                 or_nan([&] { return ou::shifted_potential(t, x); }),
                 or_nan([&] { return ou::theta_potential(t, x); })});
  }
  if (t == 1.0) out.notes.push_back("V_shifted and V_glued are defined for t_theta < 1 only");
  if (t == 1.0 && alpha == 0.0) {
    for (int k = 0;; ++k) {
      const double rk = sp::truncation_radius(k);
      if (rk > r.back()) break;
      out.notes.push_back("V_theta and V_local cross at r_" + std::to_string(k) + " = " +
                          format_number(rk));
    }
  }
  return out;
}

Table cmd_spectrum(const RunConfig& c) {
  check_l(c.l);
  if (c.levels < 0) throw UsageError("--levels must be >= 0");
  if (!(c.mass_ratio > 0.0)) throw UsageError("--mass-ratio must be > 0");
  const auto mass = sp::MassConfig::from_ratio(c.mass_ratio);
  const double r0 = sp::universal_core_radius();

  Table out;
  out.command = "spectrum";
  out.add_parameter("mass_ratio", c.mass_ratio);
  out.add_parameter("l", std::to_string(c.l));
  out.add_parameter("levels", std::to_string(c.levels));
  out.add_parameter("eps2", mass.eps2());
  out.add_parameter("core_radius", r0);
  out.columns = {"n",      "E_numeric",     "ratio_numeric", "E_matching",  "branch",
                 "E_analytic", "ratio_matching", "zeta_matching", "zeta_numeric"};

  sp::EfimovExponent ex;
  try {
    ex = sp::efimov_exponent(mass, c.l);
  } catch (const BelowCriticalMass& e) {
    if (!c.allow_empty) throw;
    out.add_parameter("critical_mass", e.critical_ratio());
    out.notes.push_back("below the critical mass: no Efimov ladder");
    return out;
  }
  const double law = std::exp(2.0 * specfun::kPi / ex.beta);
  out.add_parameter("beta", ex.beta);
  out.add_parameter("geometric_ratio", law);
  if (c.levels == 0) return out;

  sp::SpectrumResult numeric;
  sp::NumericOptions opt;
  opt.count = c.levels;
  try {
    numeric = sp::numeric_spectrum(sp::PotentialSpec::nonlocal_unitary(), mass, c.l, opt);
  } catch (const PrecisionFloorError& e) {
    out.notes.push_back(std::string("numeric levels omitted: ") + e.what());
  }
  sp::SpectrumResult matching;
  try {
    matching = sp::matching_levels(mass, c.l, c.levels, r0, 0.0);
  } catch (const PrecisionFloorError& e) {
    out.notes.push_back(std::string("matching levels omitted: ") + e.what());
  }

  auto energy = [](const sp::SpectrumResult& s, int i) {
    return i < static_cast<int>(s.levels.size()) ? s.levels[i].E : kNaN;
  };
  for (int i = 0; i < c.levels; ++i) {
    const double en = energy(numeric, i);
    const double em = energy(matching, i);
    double ea = kNaN;
    long long branch = -1;
    if (i < static_cast<int>(matching.levels.size())) {
      branch = matching.levels[i].branch;
      ea = sp::analytic_efimov_levels(mass, c.l, matching.levels[i].branch,
                                      matching.levels[i].branch, r0, 0.0)
               .levels.front()
               .E;
    }
    out.add_row({static_cast<long long>(i + 1), en, en / energy(numeric, i + 1), em, branch, ea,
                 em / energy(matching, i + 1), em / ea - 1.0, en / ea - 1.0});
  }
  return out;
}

Table cmd_scattering(const RunConfig& c) {
  const double t = checked_t(c, 1.0, true);
  const auto r = linear_grid(c, 0.05, 20.0);
  Table out;
  out.command = "scattering";
  out.add_parameter("t_theta", t);
  out.add_parameter("sector", tc::to_string(c.sector));
  add_grid_parameters(out, r, c.points);
  if (t < 1.0) {
    out.add_parameter("limit_r0", std::sqrt(2.0) / (1.0 - t));
    out.add_parameter("limit_rinf", 2.0 * std::sqrt(2.0) / (1.0 - t));
  }
  out.columns = {"r", "scattering_length", "pole", "minus_lambda_even", "minus_lambda_odd"};
  for (double x : r) {
    const auto a = tc::scattering_length(c.sector, t, x);
    const auto odd = tc::odd_state_eigenvalue(t, x);
    out.add_row({x, a.value, static_cast<long long>(a.pole), tc::effective_eigenvalue(t, x),
                 odd ? *odd : kNaN});
  }
  return out;
}

Table cmd_size(const RunConfig& c) {
  std::vector<double> ts = {0.5, 0.9, 0.99};
  if (c.t_theta) ts = {checked_t(c, 0.9, false)};
  Table out;
  out.command = "size";
  out.add_parameter("size_ratio_leading", ou::size_ratio_leading());
  out.columns = {"t_theta", "a0", "S", "S_over_a0", "crossing", "crossing_over_a0", "jump_at_a0"};
  for (double t : ts) {
    const auto s = ou::spatial_size(t);
    out.add_row({t, s.a0, s.size, s.ratio, s.crossing, s.crossing_ratio, ou::theta_jump(t)});
  }
  return out;
}

Table cmd_bargmann(const RunConfig& c) {
  const double t = checked_t(c, 0.9, false);
  check_l(c.l);
  Table out;
  out.command = "bargmann";
  out.add_parameter("t_theta", t);
  out.add_parameter("l", std::to_string(c.l));
  out.add_parameter("segment_units", "eps^-2/(2l+1)");
  out.columns = {"size_ratio", "segment", "r_lo", "r_hi", "value", "closed_form"};
  static const char* const kNames[] = {"[0,a0]", "(a0,S]", "(S,inf)"};
  for (double ratio : {2.8, -1.0}) {
    const auto rep = ou::bargmann_bound(t, c.l, ratio);
    const double shown = ratio > 0 ? ratio : ou::size_ratio_leading();
    for (std::size_t i = 0; i < rep.segments.size(); ++i) {
      const auto& s = rep.segments[i];
      out.add_row({shown, std::string(i < 3 ? kNames[i] : "?"), s.r_lo, s.r_hi, s.value,
                   s.closed_form});
    }
    out.add_row({shown, std::string("total"), 0.0, HUGE_VAL, rep.total, kNaN});
    if (ratio > 0) {
      out.notes.push_back("exact glued branch: (a0,S] " + format_number(rep.exact_outer_a0_s) +
                          ", (S,inf) " + format_number(rep.exact_outer_s_inf));
      out.notes.push_back("jump of V_theta at a0: " + format_number(rep.jump_at_a0));
    }
  }
  return out;
}

Table cmd_critical_mass(const RunConfig& c) {
  check_l(c.l);
  Table out;
  out.command = "critical-mass";
  out.add_parameter("l_max", std::to_string(c.l));
  out.add_parameter("hyperspherical_l1_reference", sp::kHypersphericalCriticalMass);
  out.columns = {"l", "critical_mass"};
  for (int l = 0; l <= c.l; ++l) {
    out.add_row({static_cast<long long>(l), sp::critical_mass(l)});
  }
  return out;
}

Report cmd_report(const RunConfig& c) {
  Report rep;
  try {
    rep.results = acceptance::run(c.only);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  rep.table.command = "report";
  std::string sel;
  for (const auto& s : c.only) sel += (sel.empty() ? "" : ",") + s;
  rep.table.add_parameter("only", sel.empty() ? "all" : sel);
  rep.table.columns = {"id", "key", "passed", "measured", "required", "seconds", "budget_seconds"};
  rep.all_passed = true;
  for (const auto& r : rep.results) {
    rep.all_passed = rep.all_passed && r.passed;
    rep.table.add_row({static_cast<long long>(r.id), r.key, std::string(r.passed ? "pass" : "fail"),
                       r.measured, r.tolerance, r.seconds, r.budget_seconds});
  }
  return rep;
}

}  // namespace efimov::cli
