#include "efimov/specfun.hpp"
#include "efimov/two_center.hpp"

#include <boost/math/tools/roots.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>

namespace tc = efimov::two_center;
namespace sf = efimov::specfun;

namespace {

const double kSqrt2 = std::sqrt(2.0);

double det_ratio(tc::Sector s, double t, double lambda, double r) {
  const auto g = tc::gamma_matrix(s, t, lambda, r);
  return g.determinant() / g.scale();
}

}  // namespace

TEST(ExchangeOscillation, ValuesAndRoots) {
  for (double t : {-2.0, 0.0, 0.7, 1.0}) {
    const auto o = tc::exchange_oscillation(0.0, t);
    EXPECT_EQ(o.g, 1.0);
    EXPECT_EQ(o.h, -1.0);
  }
  for (int k = 0; k < 5; ++k) {
    const double r = kSqrt2 * (0.75 * sf::kPi + k * sf::kPi);
    EXPECT_NEAR(tc::exchange_oscillation(r, 1.0).g, 0.0, 1e-15);
    EXPECT_NEAR(tc::oscillation_root(1.0, k + 1), r, 1e-12);
  }
  for (double t : {-1.0, 0.3}) {
    for (int k = 1; k <= 3; ++k) {
      EXPECT_NEAR(tc::exchange_oscillation(tc::oscillation_root(t, k), t).g, 0.0, 1e-14);
    }
  }
}

TEST(GammaMatrix, DeterminantVanishesAtClosedFormEigenvalue) {
  for (int i = 0; i < 40; ++i) {
    const double r = 1e-3 * std::pow(1e5, i / 39.0);
    for (double t : {-3.0, -0.5, 0.0, 0.4, 0.9, 1.0}) {
      const double lambda = -tc::effective_eigenvalue(t, r);
      ASSERT_LE(std::fabs(det_ratio(tc::Sector::Bosonic, t, lambda, r)), 1e-10)
          << "r=" << r << " t=" << t;
    }
  }
}

TEST(GammaMatrix, RootBracketingOracle) {
  // Find the zero of the even factor diagonal + off_diagonal independently and
  // compare with the closed form. det alone would also vanish on the odd root,
  // which sits within a few percent of the even one at r = 6.
  for (double r : {0.5, 2.0, 6.0}) {
    for (double t : {0.0, 0.5, 1.0}) {
      const double lam = -tc::effective_eigenvalue(t, r);
      auto f = [&](double x) {
        const auto g = tc::gamma_matrix(tc::Sector::Bosonic, t, x, r);
        return g.diagonal + g.off_diagonal;
      };
      boost::math::tools::eps_tolerance<double> tol(50);
      std::uintmax_t it = 200;
      const auto b = boost::math::tools::toms748_solve(f, 0.9 * lam, 1.1 * lam, tol, it);
      EXPECT_NEAR(0.5 * (b.first + b.second) / lam, 1.0, 1e-12) << "r=" << r << " t=" << t;
    }
  }
}

TEST(GammaMatrix, EigenvalueEquationIdentity) {
  for (double r : {0.01, 0.3, 1.0, 4.0, 12.0}) {
    for (double t : {-1.0, 0.5, 1.0}) {
      const double s = std::sqrt(-tc::effective_eigenvalue(t, r));
      const double g = tc::exchange_oscillation(r, t).g;
      EXPECT_NEAR(std::exp(-s * r) - s * r + (r / kSqrt2) * (1.0 - t) - g, 0.0, 1e-11)
          << "r=" << r << " t=" << t;
    }
  }
}

TEST(GammaMatrix, SectorsDifferOnlyInOffDiagonalSign) {
  for (double r : {0.3, 2.0}) {
    for (double lam : {0.1, 1.0}) {
      const auto b = tc::gamma_matrix(tc::Sector::Bosonic, 0.5, lam, r);
      const auto f = tc::gamma_matrix(tc::Sector::Fermionic, 0.5, lam, r);
      EXPECT_EQ(b.diagonal, f.diagonal);
      EXPECT_NEAR(b.off_diagonal + f.off_diagonal, 0.0, 1e-16);
    }
  }
}

TEST(GammaMatrix, DecouplesAtLargeSeparation) {
  const auto g = tc::gamma_matrix(tc::Sector::Bosonic, 0.5, 1.0, 200.0);
  EXPECT_LT(std::fabs(g.off_diagonal), 1e-40);
}

TEST(GammaMatrix, LocalDirectSubstitution) {
  const auto g = tc::gamma_matrix_local(0.0, 0.0, 1.0);
  EXPECT_NEAR(g.diagonal, 0.0, 1e-16);
  EXPECT_NEAR(g.off_diagonal, -1.0 / (4.0 * sf::kPi), 1e-16);
}

TEST(EffectiveEigenvalue, UnitaryAsymptotics) {
  const double w2 = sf::omega() * sf::omega();
  // Tail: bounded by C e^{-r/sqrt2} with C stable over [10, 40].
  double cmax = 0.0;
  for (double r = 10.0; r <= 40.0; r += 0.5) {
    const double c = std::fabs(tc::effective_eigenvalue(1.0, r) + w2 / (r * r)) * std::exp(r / kSqrt2);
    cmax = std::max(cmax, c);
  }
  EXPECT_LT(cmax, 0.1);
  double cmin = 1e300;
  cmax = 0.0;
  for (double r = 1e-3; r <= 0.1; r *= 1.1) {
    const double c = std::fabs(tc::effective_eigenvalue(1.0, r) + r * r / 16.0) / (r * r * r);
    cmin = std::min(cmin, c);
    cmax = std::max(cmax, c);
  }
  EXPECT_LT(cmax / cmin, 1.2);
  EXPECT_EQ(tc::effective_eigenvalue(1.0, 0.0), 0.0);
}

TEST(EffectiveEigenvalue, PlateauMatchesScatteringLength) {
  for (double t : {-1.0, 0.0, 0.5, 0.9}) {
    const double a0 = tc::scattering_length(tc::Sector::Bosonic, t, 0.0).value;
    EXPECT_NEAR(a0, tc::a0_from_t(t), 1e-14);
    for (double r : {1e-6, 1e-5}) {
      EXPECT_NEAR(tc::effective_eigenvalue(t, r) * a0 * a0, -1.0, 1e-4) << "t=" << t;
    }
    // The large-r approach is e^{-min(1, 1-t) r/sqrt2} / r.
    const double far = 40.0 * kSqrt2 / std::min(1.0, 1.0 - t);
    EXPECT_NEAR(tc::effective_eigenvalue(t, far), -0.5 * (1 - t) * (1 - t), 1e-15);
  }
  EXPECT_THROW(tc::effective_eigenvalue(1.5, 1.0), std::domain_error);
}

TEST(EffectiveEigenvalue, ContinuousAcrossSeriesSwitch) {
  for (double t : {0.2, 1.0}) {
    const double a = tc::effective_eigenvalue(t, 1e-4 * (1.0 - 1e-13));
    const double b = tc::effective_eigenvalue(t, 1e-4 * (1.0 + 1e-13));
    EXPECT_NEAR(a, b, 1e-11 * std::fabs(a));
  }
}

TEST(LocalEigenvalue, InverseSquareAtUnitarity) {
  const double w2 = sf::omega() * sf::omega();
  for (double r : {1e-3, 0.5, 7.0, 100.0}) {
    EXPECT_NEAR(tc::local_effective_eigenvalue(0.0, r) * r * r, -w2, 1e-14);
  }
  // Divergence at the origin for any alpha <= 0.
  EXPECT_NEAR(tc::local_effective_eigenvalue(-1.0, 1e-6) * 1e-12, -w2, 1e-4);
}

TEST(LocalEigenvalue, ScaleInvariance) {
  // r^2 lambda_local depends on alpha r only.
  for (double s : {0.1, 3.0, 17.0}) {
    for (double r : {0.2, 1.0, 5.0}) {
      const double a = tc::local_effective_eigenvalue(-0.3, r) * r * r;
      const double b = tc::local_effective_eigenvalue(-0.3 / s, s * r) * s * s * r * r;
      EXPECT_NEAR(a, b, 1e-13 * std::fabs(a));
    }
  }
}

TEST(ScatteringLength, Limits) {
  for (double t : {-1.0, 0.0, 0.5}) {
    EXPECT_NEAR(tc::scattering_length(tc::Sector::Bosonic, t, 1e-6).value, kSqrt2 / (1 - t),
                1e-6 * kSqrt2 / (1 - t));
    // The approach at large r is algebraic, 2 sqrt2/(1-t) / (1 + sqrt2/((1-t) r)), once g
    // has died out.
    for (double r : {1e3, 1e5}) {
      const double a = tc::scattering_length(tc::Sector::Bosonic, t, r).value;
      EXPECT_NEAR(a, 2 * kSqrt2 / (1 - t) / (1.0 + kSqrt2 / ((1 - t) * r)), 1e-12);
    }
    EXPECT_EQ(tc::scattering_length(tc::Sector::Fermionic, t, 3.0).value,
              tc::scattering_length(tc::Sector::Bosonic, t, 3.0).value);
  }
}

TEST(ScatteringLength, UnitaryCase) {
  const double g1 = tc::exchange_oscillation(1.0, 1.0).g;
  const auto a = tc::scattering_length(tc::Sector::Bosonic, 1.0, 1.0);
  EXPECT_FALSE(a.pole);
  EXPECT_NEAR(a.value, 2.0 / (1.0 - g1), 1e-14);
  EXPECT_TRUE(tc::scattering_length(tc::Sector::Bosonic, 1.0, 0.0).pole);
  EXPECT_TRUE(std::isinf(tc::scattering_length(tc::Sector::Bosonic, 1.0, 0.0).value));
}

TEST(ScatteringAmplitude, ZeroEnergyLimit) {
  const auto geo = tc::CenterGeometry::along_z(2.0);
  const tc::Vec3 w{0.0, 0.6, 0.8};
  const tc::Vec3 wp{1.0, 0.0, 0.0};
  for (double t : {0.0, 0.5}) {
    const auto f = tc::scattering_amplitude(tc::Sector::Bosonic, t, 0.0, w, wp, geo);
    EXPECT_NEAR(f.value.real(), -tc::scattering_length(tc::Sector::Bosonic, t, 2.0).value, 1e-12);
    EXPECT_NEAR(f.value.imag(), 0.0, 1e-14);
  }
}

TEST(ScatteringAmplitude, Reciprocity) {
  const auto geo = tc::CenterGeometry::along_z(2.0);
  const tc::Vec3 w{0.0, 0.6, 0.8};
  const tc::Vec3 wp{0.6, 0.0, -0.8};
  const tc::Vec3 mw{0.0, -0.6, -0.8};
  const tc::Vec3 mwp{-0.6, 0.0, 0.8};
  const auto a = tc::scattering_amplitude(tc::Sector::Bosonic, 0.5, 0.3, w, wp, geo);
  const auto b = tc::scattering_amplitude(tc::Sector::Bosonic, 0.5, 0.3, mwp, mw, geo);
  EXPECT_NEAR(std::abs(a.value - b.value), 0.0, 1e-13);
}

TEST(GeneralizedEigenfunction, SolvesHelmholtzAwayFromCenters) {
  const auto geo = tc::CenterGeometry::along_z(2.0);
  const tc::Vec3 k{0.1, 0.2, 0.25};
  const double k2 = 0.01 + 0.04 + 0.0625;
  const tc::Vec3 x{0.7, -0.4, 0.3};
  auto psi = [&](double dx, double dy, double dz) {
    return tc::generalized_eigenfunction(tc::Sector::Bosonic, 0.5, k, {x[0] + dx, x[1] + dy, x[2] + dz},
                                         geo)
        .value;
  };
  double prev = 0.0;
  for (double h : {2e-2, 1e-2, 5e-3}) {
    const auto c = psi(0, 0, 0);
    const auto lap = (psi(h, 0, 0) + psi(-h, 0, 0) + psi(0, h, 0) + psi(0, -h, 0) + psi(0, 0, h) +
                      psi(0, 0, -h) - 6.0 * c) /
                     (h * h);
    const double res = std::abs(lap + k2 * c);
    if (prev > 0.0) {
      EXPECT_LT(res, 0.3 * prev);
    }
    prev = res;
  }
  EXPECT_LT(prev, 3e-4);
  EXPECT_TRUE(tc::generalized_eigenfunction(tc::Sector::Bosonic, 0.5, k, {0.0, 0.0, 1.0 + 1e-5}, geo)
                  .too_close);
}

TEST(BethePeierls, BosonicEvenState) {
  const auto geo = tc::CenterGeometry::along_z(2.0);
  const double lam = -tc::effective_eigenvalue(0.5, 2.0);
  for (int i : {1, 2}) {
    EXPECT_LE(std::fabs(tc::bethe_peierls_residual(tc::Sector::Bosonic, 0.5, lam, geo, i).residual),
              1e-8);
  }
}

TEST(BethePeierls, FermionicOddState) {
  const auto geo = tc::CenterGeometry::along_z(6.0);
  const auto e = tc::odd_state_eigenvalue(0.5, 6.0);
  ASSERT_TRUE(e.has_value());
  EXPECT_LE(std::fabs(tc::bethe_peierls_residual(tc::Sector::Fermionic, 0.5, -*e, geo, 1).residual),
            1e-8);
  // At r = 2 the odd state does not exist.
  EXPECT_FALSE(tc::odd_state_eigenvalue(0.5, 2.0).has_value());
}

TEST(BethePeierls, LocalModel) {
  const auto geo = tc::CenterGeometry::along_z(1.5);
  const double lam = -tc::local_effective_eigenvalue(-0.2, 1.5);
  EXPECT_LE(std::fabs(tc::bethe_peierls_residual_local(tc::Sector::Bosonic, -0.2, lam, geo, 1).residual),
            1e-8);
}
