#pragma once

// Special functions needed by the two-center and radial problems. Everything
// here is pure and thread safe.

namespace efimov::specfun {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// Principal real branch of the Lambert W function, x >= -1/e.
double lambert_w0(double x);

// W(1), the omega constant.
double omega();

// I_{l+1/2}(x) for 0 <= l <= 12 and x > 0. Throws std::overflow_error when
// e^x is not representable (x > 700); use the scaled form there.
double bessel_i_half(int l, double x);

// e^{-x} I_{l+1/2}(x); usable for any x > 0.
double bessel_i_half_scaled(int l, double x);

// J_{l+1/2}(x) for 0 <= l <= 12 and x > 0.
double bessel_j_half(int l, double x);

struct KImag {
  double value = 0.0;       // K_{i beta}(x)
  double derivative = 0.0;  // d/dx K_{i beta}(x)
  bool accuracy_loss = false;
};

// K_{i beta}(x) from trapezoidal quadrature of
//   int_0^inf exp(-x cosh t) cos(beta t) dt.
// The integrand is entire and decays double exponentially, so the rule
// converges geometrically. accuracy_loss is raised when the cancellation
// between oscillating lobes (about e^{beta pi / 2}) eats more than six
// digits.
KImag bessel_k_imag(double beta, double x);

// Independent evaluation: ascending series for x < 2, Temme/Steed continued
// fraction above. Used as a cross-check and in tests.
KImag bessel_k_imag_series(double beta, double x);

// arg Gamma(1 + i beta) on the principal branch (-pi, pi].
double gamma_phase(double beta);

// Im log Gamma(1 + i beta) continued from beta = 0 (no 2 pi wrapping).
double gamma_phase_unwrapped(double beta);

// |Gamma(1 + i beta)| = sqrt(pi beta / sinh(pi beta)).
double gamma_modulus(double beta);

// Gamma(0, x) = E_1(x) for x > 0.
double incomplete_gamma0(double x);

// First positive zero of J_{l+1/2}, 0 <= l <= 12.
double bessel_j_first_zero(int l);

}  // namespace efimov::specfun
