#pragma once

// Finite scattering length (t < 1): shifted and glued potentials, the
// spatial size S where the glued potential meets the unitary law, and the
// Bargmann bound on the number of levels split over [0, a0], (a0, S], (S, inf).

#include <vector>

namespace efimov::off_unitarity {

// -lambda_theta(r) + (1 - t)^2 / 2; vanishes at r = 0 and r -> inf.
double shifted_potential(double t_theta, double r);

// Glued profile: shifted_potential on [0, a0], and beyond a0 the same
// Lambert-W form with the oscillation g removed.
double theta_potential(double t_theta, double r);

// The branch used beyond a0, evaluated anywhere.
double theta_outer_branch(double t_theta, double r);

// Leading long-range form of the outer branch,
//   -(e^{-2r/a0}/r^2 + (2/a0)(e^{-r/a0} - e^{-2r/a0})/r).
double theta_long_range_estimate(double t_theta, double r);

// theta_potential(a0+) - theta_potential(a0-).
double theta_jump(double t_theta);

struct SpatialSize {
  double size;             // S
  double ratio;            // S / a0
  double a0;
  double crossing;         // first crossing of the exact outer branch with -lambda_1
  double crossing_ratio;   // crossing / a0
};

// S from the leading long-range estimate equated to the unitary tail
// -W(1)^2/r^2, i.e. the root zeta = S/a0 of
//   e^{-2 zeta} + 2 zeta (e^{-zeta} - e^{-2 zeta}) = W(1)^2.
// The crossing of the exact branch with -lambda_1 is reported alongside.
SpatialSize spatial_size(double t_theta);

// Root of the dimensionless size equation above.
double size_ratio_leading();

struct Segment {
  double r_lo;
  double r_hi;
  double value;          // int r |V| dr over the segment
  double closed_form;    // closed-form value where one exists, else NaN
};

struct BargmannReport {
  std::vector<Segment> segments;
  double total = 0.0;
  int l = 0;
  double t_theta = 0.0;
  double jump_at_a0 = 0.0;
  // Outer segments integrated with the exact glued branch instead of the
  // long-range estimate, for comparison.
  double exact_outer_a0_s = 0.0;
  double exact_outer_s_inf = 0.0;

  // Number-of-levels bound: total * eps^{-2} / (2l + 1).
  double bound(double eps2) const { return total / eps2 / (2.0 * l + 1.0); }
};

// Antiderivative in zeta = r/a0 of r |V| for the long-range estimate,
// 2(e^{-zeta} - e^{-2zeta}) + e^{-2zeta}/zeta:
//   F(x) = -2 e^{-x} + e^{-2x} - Gamma(0, 2x).
double bargmann_antiderivative(double x);

// Segments in units of eps^{-2}/(2l+1). size_ratio <= 0 selects the solved
// S/a0; the outer segments use the long-range estimate, integrated
// numerically and checked against the closed form.
BargmannReport bargmann_bound(double t_theta, int l, double size_ratio = -1.0);

// int_{r_lo}^{S} r |V| dr with the long-range estimate, for the log-growth
// check as a0 grows at fixed r_lo.
double bargmann_inner_tail(double r_lo, double a0, double size_ratio);

}  // namespace efimov::off_unitarity
