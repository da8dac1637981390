#pragma once

// Light particle in the field of two point interactions at separation r:
// Gamma matrices of the Krein resolvent, the closed-form bound-state energy
// (the Born-Oppenheimer effective potential), scattering data and
// boundary-condition checks.
//
// Units: hbar = 1 and the light particle has 2m = 1; lengths are NOT
// rescaled by the sqrt(2) that appears in g_theta.

#include <array>
#include <complex>
#include <optional>

namespace efimov::two_center {

enum class Sector { Bosonic, Fermionic };

const char* to_string(Sector s);

// alpha = (t - 1) / (4 sqrt(2) pi); t <= 1 required.
double alpha_from_t(double t_theta);

// a0 = sqrt(2) / (1 - t); +inf at t = 1.
double a0_from_t(double t_theta);

struct Oscillation {
  double g;
  double h;  // always -g
};

// g = e^{-r/sqrt2} (t sin(r/sqrt2) + cos(r/sqrt2)).
Oscillation exchange_oscillation(double r, double t_theta);

// k-th positive root (k >= 1) of g, r_k = sqrt2 (k pi - arccot t).
double oscillation_root(double t_theta, int k);

using Vec3 = std::array<double, 3>;

struct CenterGeometry {
  Vec3 y1{};
  Vec3 y2{};

  double separation() const;
  // Centers at (0, 0, +r/2) and (0, 0, -r/2).
  static CenterGeometry along_z(double r);
};

struct GammaMatrix {
  double diagonal = 0.0;
  double off_diagonal = 0.0;
  double lambda = 0.0;
  Sector sector = Sector::Bosonic;
  double t_theta = 1.0;
  double r = 0.0;
  // Magnitudes of the terms summed into each entry. Near the bound state the
  // entries themselves cancel, so det == 0 is judged against these.
  double diagonal_terms = 0.0;
  double off_diagonal_terms = 0.0;

  double determinant() const { return diagonal * diagonal - off_diagonal * off_diagonal; }
  double scale() const {
    return diagonal_terms * diagonal_terms + off_diagonal_terms * off_diagonal_terms;
  }
  std::array<double, 4> entries() const {
    return {diagonal, off_diagonal, off_diagonal, diagonal};
  }
};

GammaMatrix gamma_matrix(Sector sector, double t_theta, double lambda, double r);

// Local two-center model: the g_theta term is absent and alpha is free.
GammaMatrix gamma_matrix_local(double alpha, double lambda, double r,
                               Sector sector = Sector::Bosonic);

// -lambda_theta(r), the ground-state energy of the light particle. Defined by
// continuity at r = 0. Throws std::domain_error for t > 1.
double effective_eigenvalue(double t_theta, double r);

// -lambda_local(r) = -(W(e^{4 pi alpha r}) - 4 pi alpha r)^2 / r^2.
double local_effective_eigenvalue(double alpha, double r);

// Antisymmetric (odd) light-particle state, from
//   s + e^{-s} = (r/sqrt2)(1 - t) + g,   s = sqrt(lambda) r.
// Exists only when the right-hand side exceeds 1.
std::optional<double> odd_state_eigenvalue(double t_theta, double r);

struct ScatteringLength {
  double value;
  bool pole;  // denominator vanished; value is a signed infinity
};

// a(r) = 2r / ((r/sqrt2)(1-t) - g + 1). Same in both sectors. r = 0 and
// r = +inf return the limiting values.
ScatteringLength scattering_length(Sector sector, double t_theta, double r);

struct Amplitude {
  std::complex<double> value;
  bool singular;  // Gamma(k^2) not invertible
};

Amplitude scattering_amplitude(Sector sector, double t_theta, double k, const Vec3& omega,
                               const Vec3& omega_prime, const CenterGeometry& geometry);

using ComplexMatrix2 = std::array<std::complex<double>, 4>;  // row major

// Inverse of Gamma(k^2) at positive energy, with sqrt(lambda) -> -ik.
ComplexMatrix2 gamma_inverse_at_energy(Sector sector, double t_theta, double k, double r);

struct WaveValue {
  std::complex<double> value;
  bool too_close;  // x within the exclusion radius of a center
};

// Plane wave plus the outgoing spherical waves from both centers.
// exclusion_radius < 0 selects the default 1e-3 * r.
WaveValue generalized_eigenfunction(Sector sector, double t_theta, const Vec3& k,
                                    const Vec3& x, const CenterGeometry& geometry,
                                    double exclusion_radius = -1.0);

// Same as above with the coefficient matrix supplied explicitly.
WaveValue generalized_eigenfunction_with(const ComplexMatrix2& coefficients, Sector sector,
                                         const Vec3& k, const Vec3& x,
                                         const CenterGeometry& geometry,
                                         double exclusion_radius = -1.0);

struct BoundaryResidual {
  double charge;    // coefficient of 1/(4 pi |x - y_i|)
  double constant;  // regular part at y_i
  double expected;  // charge * (alpha + g/(4 pi r)) or with h in the fermionic case
  double residual;  // constant - expected
};

// Expands G(x-y1) +- G(x-y2) around y_i (i = 1 or 2) with Richardson
// extrapolation and compares with the point-interaction boundary condition.
BoundaryResidual bethe_peierls_residual(Sector sector, double t_theta, double lambda,
                                        const CenterGeometry& geometry, int i);

// Same extraction with the g_theta coupling removed (local model).
BoundaryResidual bethe_peierls_residual_local(Sector sector, double alpha, double lambda,
                                              const CenterGeometry& geometry, int i);

}  // namespace efimov::two_center
