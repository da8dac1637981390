#include "efimov/errors.hpp"
#include "efimov/specfun.hpp"
#include "efimov/spectrum.hpp"
#include "efimov/two_center.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace sp = efimov::spectrum;
namespace sf = efimov::specfun;

namespace {

const sp::MassConfig kM20 = sp::MassConfig::from_ratio(20.0);

double law(const sp::MassConfig& m, int l) {
  return std::exp(2.0 * sf::kPi / sp::efimov_exponent(m, l).beta);
}

sp::SpectrumResult numeric(const sp::PotentialSpec& v, const sp::MassConfig& m, int l, int count,
                           int first = 1) {
  sp::NumericOptions o;
  o.first = first;
  o.count = count;
  return sp::numeric_spectrum(v, m, l, o);
}

}  // namespace

TEST(MassConfig, RoundTrips) {
  const auto m = sp::MassConfig::from_ratio(20.0);
  EXPECT_NEAR(m.eps2(), 4.0 / 41.0, 1e-16);
  EXPECT_NEAR(sp::MassConfig::from_eps2(m.eps2()).ratio(), 20.0, 1e-12);
}

TEST(EfimovExponent, DirectArithmetic) {
  const auto ex = sp::efimov_exponent(kM20, 0);
  const double w = sf::omega();
  EXPECT_NEAR(ex.beta * ex.beta + 0.25, w * w / kM20.eps2(), 1e-13);
  EXPECT_NEAR(ex.beta, 1.7455451860, 1e-9);
  EXPECT_NEAR(ex.phi_beta, sf::gamma_phase(ex.beta), 0.0);
}

TEST(CriticalMass, ValuesAndThreshold) {
  const double w2 = sf::omega() * sf::omega();
  EXPECT_NEAR(sp::critical_mass(0), (1.0 - w2) / (2.0 * w2), 1e-14);
  EXPECT_NEAR(sp::critical_mass(0), 1.0545, 1e-4);
  EXPECT_NEAR(sp::critical_mass(1), 13.4902, 1e-3);
  for (int l = 0; l <= 2; ++l) {
    const double mc = sp::critical_mass(l);
    EXPECT_THROW(sp::efimov_exponent(sp::MassConfig::from_ratio(mc * (1 - 1e-6)), l),
                 efimov::BelowCriticalMass);
    EXPECT_GT(sp::efimov_exponent(sp::MassConfig::from_ratio(mc * (1 + 1e-6)), l).beta, 0.0);
  }
  try {
    sp::efimov_exponent(sp::MassConfig::from_ratio(13.0), 1);
    FAIL();
  } catch (const efimov::BelowCriticalMass& e) {
    EXPECT_NEAR(e.critical_ratio(), 13.4903, 1e-4);
    EXPECT_NE(std::string(e.what()).find("13.4902"), std::string::npos);
  }
}

TEST(InteriorFunction, LimitsAndBesselForms) {
  for (int l = 0; l <= 3; ++l) {
    EXPECT_EQ(sp::interior_function(l, 0.0), 1.0);
    EXPECT_NEAR(sp::interior_log_factor(l, 0.0), 1.0 / (2 * l + 1), 1e-15);
    const double xi = 2.5;
    const double nu = l + 0.5;
    const double expected = std::tgamma(nu + 1.0) * std::pow(0.5 * xi, -nu) * sf::bessel_i_half(l, xi);
    EXPECT_NEAR(sp::interior_function(l, xi * xi) / expected, 1.0, 1e-13);
    // f = I / (2 xi I'), I' = I_{nu+1} + (nu/xi) I_nu.
    const double ip = sf::bessel_i_half(l + 1, xi) + nu / xi * sf::bessel_i_half(l, xi);
    EXPECT_NEAR(sp::interior_log_factor(l, xi * xi), sf::bessel_i_half(l, xi) / (2 * xi * ip), 1e-13);
    const double y = 1.7;
    const double jexp = std::tgamma(nu + 1.0) * std::pow(0.5 * y, -nu) * sf::bessel_j_half(l, y);
    EXPECT_NEAR(sp::interior_function(l, -y * y), jexp, 1e-13);
  }
}

TEST(AnalyticLevels, GeometricLawIsExact) {
  const auto res = sp::analytic_efimov_levels(kM20, 0, 1, 8, sp::universal_core_radius(), 0.0);
  ASSERT_EQ(res.levels.size(), 8u);
  for (std::size_t i = 0; i + 1 < res.levels.size(); ++i) {
    EXPECT_NEAR(res.levels[i].E / res.levels[i + 1].E / law(kM20, 0), 1.0, 1e-12);
  }
  const double r0 = sp::universal_core_radius();
  EXPECT_NEAR(4.0 / (r0 * r0), 32.0 / (9.0 * sf::kPi * sf::kPi), 1e-15);
}

TEST(AnalyticLevels, SubnormalFlag) {
  const auto res = sp::analytic_efimov_levels(kM20, 0, 200, 200, sp::universal_core_radius(), 0.0);
  EXPECT_TRUE(res.levels.front().subnormal);
}

TEST(Matching, AgreesWithNumericOnAuxiliaryCore) {
  const auto m = sp::MassConfig::from_ratio(50.0);
  for (int l : {0, 2}) {
    for (double c : {0.0, -20.0}) {
      const double r0 = 1.0;
      const double lam = c * m.eps2() / (r0 * r0);
      const auto a = sp::matching_levels(m, l, 3, r0, lam);
      const auto b = numeric(sp::PotentialSpec::auxiliary_core(lam, r0), m, l, 3);
      ASSERT_EQ(a.levels.size(), 3u);
      ASSERT_EQ(b.levels.size(), 3u);
      for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(b.levels[i].E / a.levels[i].E, 1.0, 1e-6) << "l=" << l << " c=" << c;
        EXPECT_LE(a.levels[i].residual, 1e-10);
      }
    }
  }
}

TEST(Matching, ZetaVanishesUpTheLadder) {
  const double r0 = sp::universal_core_radius();
  const auto mt = sp::matching_levels(kM20, 0, 6, r0, 0.0);
  double prev = 1.0;
  for (const auto& lv : mt.levels) {
    const double ea = sp::analytic_efimov_levels(kM20, 0, lv.branch, lv.branch, r0, 0.0).levels[0].E;
    const double zeta = std::fabs(lv.E / ea - 1.0);
    EXPECT_LT(zeta, prev);
    prev = zeta;
  }
  EXPECT_LT(prev, 1e-7);
}

TEST(Matching, DeterminantVanishesAtLevels) {
  const auto m = sp::MassConfig::from_ratio(50.0);
  const auto mt = sp::matching_levels(m, 1, 2, 2.0, -0.1);
  const double beta = sp::efimov_exponent(m, 1).beta;
  for (const auto& lv : mt.levels) {
    const double tau0 = std::sqrt(-lv.E / m.eps2()) * 2.0;
    EXPECT_LT(std::fabs(sp::matching_function(m, 1, 2.0, -0.1, tau0)), 1e-9);
    (void)beta;
  }
}

TEST(Numeric, GeometricLawOnFullPotential) {
  const auto res = numeric(sp::PotentialSpec::nonlocal_unitary(), kM20, 0, 6);
  ASSERT_EQ(res.levels.size(), 6u);
  EXPECT_EQ(res.tag, "efimov");
  double prev = 1.0;
  for (std::size_t i = 0; i + 1 < res.levels.size(); ++i) {
    const double dev = std::fabs(res.levels[i].E / res.levels[i + 1].E / law(kM20, 0) - 1.0);
    EXPECT_LT(dev, prev);
    if (i >= 2) {
      EXPECT_LT(dev, 1e-2);
    }
    prev = dev;
  }
}

TEST(Numeric, NodeCountLabels) {
  const auto res = numeric(sp::PotentialSpec::nonlocal_unitary(), kM20, 1, 4);
  for (const auto& lv : res.levels) EXPECT_EQ(lv.nodes, lv.n - 1);
  const auto tail = numeric(sp::PotentialSpec::nonlocal_unitary(), kM20, 0, 2, 5);
  ASSERT_EQ(tail.levels.size(), 2u);
  EXPECT_EQ(tail.levels[0].n, 5);
  EXPECT_EQ(tail.levels[0].nodes, 4);
}

TEST(Numeric, Eps2Scaling) {
  // Doubling eps2 while doubling the potential keeps beta; energies double.
  const auto a = numeric(sp::PotentialSpec::nonlocal_unitary(), kM20, 0, 3);
  const auto b = numeric(sp::PotentialSpec::nonlocal_unitary().with_strength(2.0),
                         sp::MassConfig::from_eps2(2.0 * kM20.eps2()), 0, 3);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(b.levels[i].E / (2.0 * a.levels[i].E), 1.0, 1e-8);
}

TEST(Numeric, TruncatedFamilyConverges) {
  const auto full = numeric(sp::PotentialSpec::nonlocal_unitary(), kM20, 0, 1);
  double prev = 1.0;
  for (int k = 0; k <= 3; ++k) {
    const auto t = numeric(sp::PotentialSpec::truncated(k), kM20, 0, 1);
    const double dev = std::fabs(t.levels[0].E / full.levels[0].E - 1.0);
    EXPECT_LT(dev, prev) << "k=" << k;
    prev = dev;
  }
  EXPECT_LT(prev, 1e-5);
}

TEST(Numeric, CutoffTailFollowsTheLaw) {
  const auto res = numeric(sp::PotentialSpec::cutoff_unitary(1e6), kM20, 0, 4);
  ASSERT_EQ(res.levels.size(), 4u);
  EXPECT_LT(std::fabs(res.levels[2].E / res.levels[3].E / law(kM20, 0) - 1.0), 1e-2);
}

TEST(Numeric, JustAboveCriticalMass) {
  for (int l = 0; l <= 2; ++l) {
    const auto m = sp::MassConfig::from_ratio(sp::critical_mass(l) * (1 + 1e-6));
    const double r0 = 1.0;
    const double lam = -30.0 * m.eps2() / (r0 * r0);
    const auto a = numeric(sp::PotentialSpec::auxiliary_core(lam, r0), m, l, 1);
    ASSERT_EQ(a.levels.size(), 1u) << "l=" << l;
    const auto b = sp::matching_levels(m, l, 1, r0, lam);
    EXPECT_NEAR(a.levels[0].E / b.levels[0].E, 1.0, 1e-6);
  }
}

TEST(Numeric, ShortRangeProblemsRunOut) {
  const auto res = numeric(sp::PotentialSpec::nonlocal_finite(0.5), kM20, 0, 50);
  EXPECT_EQ(res.tag, "efimov_like");
  EXPECT_GT(res.levels.size(), 0u);
  EXPECT_LT(res.levels.size(), 50u);
  const double thr = -0.125;
  for (const auto& lv : res.levels) EXPECT_LT(lv.E, thr);
  EXPECT_EQ(sp::count_bound_states(sp::PotentialSpec::nonlocal_finite(0.5), kM20, 0, thr - 1e-12),
            static_cast<int>(res.levels.size()));
}

TEST(Numeric, RejectsUnboundedPotential) {
  EXPECT_THROW(numeric(sp::PotentialSpec::local(-0.1), kM20, 0, 1), std::domain_error);
}

TEST(Numeric, PrecisionFloor) {
  EXPECT_THROW(numeric(sp::PotentialSpec::nonlocal_unitary(), kM20, 0, 1, 190), efimov::PrecisionFloorError);
}

TEST(Wavefunction, SmoothNormalizedAndLabelled) {
  const double r0 = sp::universal_core_radius();
  const auto mt = sp::matching_levels(kM20, 0, 3, r0, 0.0);
  for (std::size_t i = 0; i < mt.levels.size(); ++i) {
    const sp::EfimovWavefunction psi(kM20, 0, mt.levels[i].E, r0, 0.0);
    const double a = psi(r0 * (1 - 1e-13));
    const double b = psi(r0 * (1 + 1e-13));
    EXPECT_NEAR(a, b, 1e-9 * std::fabs(a));
    const double dl = psi.derivative(r0 * (1 - 1e-12));
    const double dr = psi.derivative(r0 * (1 + 1e-12));
    EXPECT_NEAR(dl, dr, 1e-9 * std::max(std::fabs(dl), std::fabs(psi(r0)) / r0));
    EXPECT_EQ(psi.node_count(), static_cast<int>(i));
  }
}

TEST(Wavefunction, LogPeriodicOutsideCore) {
  const double r0 = 1.0;
  const auto mt = sp::matching_levels(kM20, 0, 5, r0, 0.0);
  const sp::EfimovWavefunction psi(kM20, 0, mt.levels[4].E, r0, 0.0);
  const double step = std::exp(sf::kPi / psi.beta());
  const double r = 1.5;
  ASSERT_LT(psi.kappa() * r * step, 1e-2);
  EXPECT_NEAR(psi.reduced(r * step), -psi.reduced(r), 1e-3 * std::fabs(psi.reduced(r)) + 1e-6 * std::fabs(psi.norm_constant()));
}

TEST(Ulam, BoundedAsEtaShrinks) {
  for (int l : {0, 1}) {
    const double a = sp::ulam_deviation(kM20, l, 0.03).sup_ratio;
    const double b = sp::ulam_deviation(kM20, l, 0.015).sup_ratio;
    const double c = sp::ulam_deviation(kM20, l, 0.0075).sup_ratio;
    EXPECT_LT(std::max({a, b, c}) / std::min({a, b, c}), 2.0);
  }
}

TEST(Ulam, ExponentIsLPlusOne) {
  for (int l : {0, 1}) {
    const double a = sp::ulam_deviation(kM20, l, 0.02).sup_abs;
    const double b = sp::ulam_deviation(kM20, l, 0.005).sup_abs;
    EXPECT_NEAR(std::log(a / b) / std::log(4.0), l + 1.0, 0.1);
  }
}

TEST(Ulam, IdenticalPotentialsDoNotDeviate) {
  const auto v = sp::PotentialSpec::auxiliary_core(0.0, sp::universal_core_radius());
  EXPECT_EQ(sp::ulam_deviation_between(v, v, kM20, 0, 0.02, 5.0).sup_abs, 0.0);
}

TEST(NonEfimov, MinimumAndBounds) {
  const auto pm = sp::find_potential_minimum();
  EXPECT_NEAR(pm.r_min, 2.0491324053, 1e-6);
  EXPECT_NEAR(pm.depth, -0.0391053892550, 1e-10);
  // Dense scan oracle.
  double best = 0.0;
  double best_r = 0.0;
  for (double r = 1.0; r < 4.0; r += 1e-4) {
    const double v = efimov::two_center::effective_eigenvalue(1.0, r);
    if (v < best) {
      best = v;
      best_r = r;
    }
  }
  EXPECT_NEAR(pm.r_min, best_r, 2e-4);
  EXPECT_LE(pm.depth, best);
  EXPECT_NEAR(sp::non_efimov_bound(0), 11.24, 0.05);
  EXPECT_NEAR(sp::non_efimov_bound(1), 23.12, 0.05);
}
