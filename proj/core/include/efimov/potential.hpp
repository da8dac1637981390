#pragma once

#include <optional>
#include <string>

namespace efimov::spectrum {

enum class PotentialKind {
  NonlocalUnitary,  // -lambda_1(r)
  NonlocalFinite,   // -lambda_theta(r), t < 1
  Local,            // -lambda_local(r); unbounded below, rejected by the solvers
  TruncatedVk,      // -lambda_1 up to r_k, -W(1)^2/r^2 beyond
  AuxiliaryCore,    // Lambda up to r0, -W(1)^2/r^2 beyond
  Shifted,          // -lambda_theta(r) + (1 - t)^2 / 2
  ThetaGlued,       // shifted form up to a0, oscillation-free form beyond
  CutoffUnitary,    // -lambda_1 up to a cutoff R, zero beyond
};

// One radial effective potential V(r) of the slow problem. Potentials with a
// jump or kink expose it through breakpoint(); inner() and outer() give the
// two branches so solvers never difference across the discontinuity.
class PotentialSpec {
 public:
  static PotentialSpec nonlocal_unitary();
  static PotentialSpec nonlocal_finite(double t_theta);
  static PotentialSpec local(double alpha);
  // r_k = sqrt2 (3 pi / 4 + k pi), k >= 0.
  static PotentialSpec truncated(int k);
  static PotentialSpec auxiliary_core(double lambda, double r0);
  static PotentialSpec shifted(double t_theta);
  static PotentialSpec theta_glued(double t_theta);
  static PotentialSpec cutoff_unitary(double cutoff);

  // Multiplies the whole profile (used for exact scaling checks).
  PotentialSpec with_strength(double strength) const;

  PotentialKind kind() const { return kind_; }
  double t_theta() const { return t_; }
  double alpha() const { return alpha_; }
  int k() const { return k_; }
  double core_depth() const { return lambda_; }
  double r0() const { return r0_; }
  double strength() const { return strength_; }

  double operator()(double r) const;
  double inner(double r) const;
  double outer(double r) const;
  std::optional<double> breakpoint() const;

  // Bottom of the essential spectrum.
  double threshold() const;
  // True when V ~ -c/r^2 at large r; c is returned by tail_coefficient().
  bool inverse_square_tail() const;
  double tail_coefficient() const;
  bool bounded_below() const;
  // Natural length used to place the inner end of radial grids.
  double reference_length() const;
  std::string describe() const;

 private:
  PotentialKind kind_ = PotentialKind::NonlocalUnitary;
  double t_ = 1.0;
  double alpha_ = 0.0;
  int k_ = 0;
  double lambda_ = 0.0;
  double r0_ = 0.0;
  double strength_ = 1.0;
};

// r_k of the truncated family.
double truncation_radius(int k);

}  // namespace efimov::spectrum
