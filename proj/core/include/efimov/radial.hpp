#pragma once

// Numerov shooting for
//   -eps2 u'' + (eps2 l(l+1)/r^2 + V(r)) u = E u
// on a logarithmic grid x = ln r. With w = u / sqrt(r) the equation becomes
// w'' = Q w, Q = (l + 1/2)^2 + r^2 (V - E) / eps2, which Numerov handles
// uniformly across the many decades an Efimov state covers.
//
// Levels are located from two Pruefer angles, one from the regular solution
// integrated outward and one from the decaying solution integrated inward,
// compared at a single match node. Their node counts give the number of
// eigenvalues below E; their angle difference is a continuous, increasing
// function of E whose zeros are the eigenvalues.

#include "efimov/potential.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace efimov::spectrum {

struct RadialGrid {
  double h = 0.0;
  // Both halves include the match node; left runs r_in -> r_match, right
  // runs r_match -> r_out.
  std::vector<double> r_left;
  std::vector<double> v_left;
  std::vector<double> r_right;
  std::vector<double> v_right;

  double r_match() const { return r_left.back(); }
  double r_out() const { return r_right.back(); }
};

struct ShootState {
  int nodes_left = 0;
  int nodes_right = 0;
  double psi_left = 0.0;   // atan2(w, w') folded into [0, pi)
  double psi_right = 0.0;

  // Number of eigenvalues strictly below the shooting energy.
  int count() const { return nodes_left + nodes_right + (psi_left > psi_right ? 1 : 0); }
  // Continuous in E; zero at the k-th eigenvalue (k = 1 is the ground state).
  double mismatch(int k) const;
  // |sin(psi_left - psi_right)|: the scaled log-derivative jump.
  double residual() const;
  // Interior zeros of the glued solution.
  int nodes() const;
};

struct RadialOptions {
  double step = 2.5e-3;          // Numerov step in ln r
  double r_in_factor = 1e-6;     // r_in = r_in_factor * reference length
  double tail_argument = 25.0;   // decay exponent past the outer turning point
};

class RadialProblem {
 public:
  // Throws std::domain_error for potentials that are not bounded below.
  RadialProblem(PotentialSpec potential, double eps2, int l, RadialOptions options = {});

  const PotentialSpec& potential() const { return potential_; }
  double eps2() const { return eps2_; }
  int l() const { return l_; }
  const RadialOptions& options() const { return options_; }
  double r_in() const { return r_in_; }

  // Bottom of the essential spectrum.
  double threshold() const { return potential_.threshold(); }
  // Lowest value of V found on a coarse scan.
  double potential_minimum() const { return v_min_; }
  // beta of the -c/r^2 tail once the centrifugal term is included; empty
  // when the tail is not inverse square or is too weak to bind infinitely.
  std::optional<double> tail_beta() const;

  // Outermost classical turning point at energy E, if any.
  std::optional<double> outer_turning_point(double energy) const;

  // Grid matched at the breakpoint (if any) or at the outer turning point
  // of e_match, and extended far enough to hold the tail at e_outer.
  RadialGrid grid_for(double e_match, double e_outer) const;

  ShootState shoot(double energy, const RadialGrid& grid) const;

  // Number of eigenvalues below E, each call on its own grid.
  int count_below(double energy) const;

  double potential_at(double r, bool outer_side) const;

 private:
  PotentialSpec potential_;
  double eps2_;
  int l_;
  RadialOptions options_;
  double r_in_;
  double v_min_;
};

// Outward Numerov solution of w'' = Q w on the grid x_i = ln r_i, uniform in
// ln r, with potential V and the first two values supplied. Returns u = sqrt(r) w.
std::vector<double> integrate_outward(const std::function<double(double)>& potential,
                                      double eps2, int l, double energy,
                                      const std::vector<double>& r, double u0, double u1);

}  // namespace efimov::spectrum
