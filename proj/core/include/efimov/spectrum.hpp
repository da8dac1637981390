#pragma once

// Slow (heavy-pair) radial problem at angular momentum l:
//   -eps2 u'' + (eps2 l(l+1)/r^2 + V(r)) u = E u,   u(r) ~ r^{l+1} at 0.
// Three ways to get levels: the leading-order analytic ladder, exact
// matching for the auxiliary-core potential, and Numerov shooting for any
// bounded-below profile.

#include "efimov/potential.hpp"
#include "efimov/radial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace efimov::spectrum {

struct MassConfig {
  double M = 1.0;  // heavy mass
  double m = 1.0;  // light mass

  static MassConfig from_ratio(double ratio);
  // Inverse of eps2(): M/m = (4/eps2 - 1)/2, with m = 1.
  static MassConfig from_eps2(double eps2);

  double ratio() const { return M / m; }
  double gamma_red() const { return 2.0 * M * m / (2.0 * M + m); }
  double eps2() const { return 4.0 * m / (2.0 * M + m); }
};

struct EfimovExponent {
  int l = 0;
  double beta = 0.0;
  double phi_beta = 0.0;  // arg Gamma(1 + i beta), principal value
};

// beta^2 = strength W(1)^2 / eps2 - l(l+1) - 1/4. Throws BelowCriticalMass
// when beta^2 <= 0 (this includes the critical mass itself).
EfimovExponent efimov_exponent(const MassConfig& mass, int l, double strength = 1.0);

// M/m at which beta vanishes: (4l(l+1) + 1 - W(1)^2) / (2 W(1)^2).
double critical_mass(int l);

// l = 1 critical mass from hyperspherical three-body calculations; a
// reference for reports, not something this code computes.
inline constexpr double kHypersphericalCriticalMass = 13.6069;

enum class Method { Analytic, Matching, Numeric };
const char* to_string(Method m);

struct Level {
  int n = 0;              // 1 for the ground state of the problem solved
  int branch = 0;         // analytic ladder index (matching levels only)
  double E = 0.0;
  int nodes = -1;         // -1 when not determined (analytic levels)
  double residual = 0.0;
  Method method = Method::Analytic;
  bool subnormal = false; // |E| fell below the smallest normal double
};

struct SpectrumResult {
  std::vector<Level> levels;
  int l = 0;
  MassConfig mass;
  std::string potential;
  // "efimov" for inverse-square tails, "efimov_like" otherwise; the
  // geometric law is only meaningful for the former.
  std::string tag;
};

// ---- Auxiliary-core matching -------------------------------------------

// 0F1(; l + 3/2; s/4). For s > 0 this is the interior solution of a
// repulsive step, Gamma(l + 3/2) (xi/2)^{-l-1/2} I_{l+1/2}(xi) with s = xi^2;
// for s < 0 the same with J and s = -y^2.
double interior_function(int l, double s);

// f = 1 / (2l + 1 + s F(l+1, s) / ((l + 3/2) F(l, s))); equals
// I(xi) / (2 xi I'(xi)) for s = xi^2 and 1/(2l+1) at s = 0.
double interior_log_factor(int l, double s);

// Leading-order ladder
//   E_n = -eps2 (4/r0^2) exp((2/beta)(arctan(2 beta f) + phi_beta - n pi)),
// f evaluated at s0 = Lambda r0^2 / eps2, for n_first <= n <= n_last.
SpectrumResult analytic_efimov_levels(const MassConfig& mass, int l, int n_first, int n_last,
                                      double r0, double lambda);

// Universal radius sqrt2 * 3pi/4 where the truncated and auxiliary forms meet.
double universal_core_radius();

// Exact levels of the auxiliary-core potential, deepest first, by bracketing
// the matching determinant in theta = beta ln(tau0/2) - phi_beta. Each level
// carries the analytic branch index, so zeta = E / E_branch^analytic - 1.
// Levels bound mainly by a deep core can share a branch index.
SpectrumResult matching_levels(const MassConfig& mass, int l, int count, double r0,
                               double lambda);

// Normalized matching determinant at tau0 (used by tests and benchmarks).
double matching_function(const MassConfig& mass, int l, double r0, double lambda, double tau0);

// ---- Numerov -------------------------------------------------------------

struct NumericOptions {
  int first = 1;   // ground state is 1
  int count = 5;
  RadialOptions radial{};
  double energy_floor = 1e-290;
  double s_tolerance = 1e-12;  // absolute, in s = ln(kappa)
};

// Bound states from the ground state up; level n has n - 1 nodes. Stops
// early (returning fewer levels) when a short-range potential runs out of
// levels. Throws PrecisionFloorError when a requested level of an
// inverse-square tail lies below the floor, GridResolutionError when counts
// cannot separate neighbouring levels.
SpectrumResult numeric_spectrum(const PotentialSpec& potential, const MassConfig& mass, int l,
                                const NumericOptions& options = {});

// Number of levels below E on a single grid.
int count_bound_states(const PotentialSpec& potential, const MassConfig& mass, int l,
                       double energy, const RadialOptions& options = {});

// ---- Wave functions ------------------------------------------------------

// Radial function of an auxiliary-core level: (r/r0)^{l+1} F(l, s(r))
// inside, sqrt(r) K_{i beta}(kappa r) outside, glued at r0 and normalized
// to unit L2 norm on (0, inf). Derivative continuity holds only when E is a
// matching eigenvalue.
class EfimovWavefunction {
 public:
  EfimovWavefunction(const MassConfig& mass, int l, double energy, double r0, double lambda);

  double operator()(double r) const;
  // u(r) / sqrt(r); log-periodic outside the core when kappa r << 1.
  double reduced(double r) const;
  double derivative(double r) const;
  double r0() const { return r0_; }
  double kappa() const { return kappa_; }
  double beta() const { return beta_; }
  double norm_constant() const { return norm_; }
  // Sign changes on a fine logarithmic grid up to kappa r = 40.
  int node_count() const;

 private:
  double unnormalized(double r) const;
  double unnormalized_derivative(double r) const;

  int l_;
  double eps2_;
  double energy_;
  double r0_;
  double lambda_;
  double kappa_;
  double beta_;
  double s0_coeff_;  // s(r) = s0_coeff_ r^2
  double inner_scale_;
  double outer_scale_;
  double norm_ = 1.0;
};

// ---- Truncation and deviation ------------------------------------------

struct UlamDeviation {
  double sup_ratio;  // sup |f - f0| / (eta r)^{l+1}
  double sup_abs;    // sup |f - f0|
  double r_at_sup;
};

// f solves the radial equation at E = -eps2 eta^2 with potential a, f0 with
// potential b, both started from the same data sqrt(eta r) I_{l+1/2}(eta r)
// at the inner end; the sup runs over [r_in, r_max].
UlamDeviation ulam_deviation_between(const PotentialSpec& a, const PotentialSpec& b,
                                     const MassConfig& mass, int l, double eta, double r_max,
                                     double step = 1e-3);

// V_k against the Lambda = 0 auxiliary core on [0, r_k].
UlamDeviation ulam_deviation(const MassConfig& mass, int l, double eta, int k = 1,
                             double step = 1e-3);

// ---- Non-Efimov condition ------------------------------------------------

struct PotentialMinimum {
  double r_min;
  double depth;  // -lambda_theta(r_min) < 0
};

// Global minimum of -lambda_theta on (0, 3 r0], r0 = universal_core_radius().
PotentialMinimum find_potential_minimum(double t_theta = 1.0);

// Mass ratio below which no level lies under the first Efimov level:
//   M/m < (2 j_{l+1/2,1} / (3 pi))^2 / |depth| - 1/8.
double non_efimov_bound(int l);

}  // namespace efimov::spectrum
