#include "efimov/potential.hpp"
#include "efimov/specfun.hpp"
#include "efimov/two_center.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace sp = efimov::spectrum;

TEST(Potential, TruncationRadiiAreOscillationRoots) {
  for (int k = 0; k < 4; ++k) {
    const double rk = sp::truncation_radius(k);
    EXPECT_NEAR(rk, std::sqrt(2.0) * (0.75 * efimov::specfun::kPi + k * efimov::specfun::kPi), 1e-13);
    const auto v = sp::PotentialSpec::truncated(k);
    ASSERT_TRUE(v.breakpoint());
    EXPECT_EQ(*v.breakpoint(), rk);
    // g vanishes at r_k, so the two branches meet.
    EXPECT_NEAR(v.inner(rk), v.outer(rk), 1e-15);
  }
  EXPECT_THROW(sp::truncation_radius(-1), std::domain_error);
}

TEST(Potential, BranchesAndThresholds) {
  const auto u = sp::PotentialSpec::nonlocal_unitary();
  EXPECT_FALSE(u.breakpoint());
  EXPECT_TRUE(u.inverse_square_tail());
  EXPECT_EQ(u.threshold(), 0.0);
  EXPECT_EQ(u(2.0), efimov::two_center::effective_eigenvalue(1.0, 2.0));

  const auto f = sp::PotentialSpec::nonlocal_finite(0.5);
  EXPECT_FALSE(f.inverse_square_tail());
  EXPECT_NEAR(f.threshold(), -0.125, 1e-16);

  const auto a = sp::PotentialSpec::auxiliary_core(-0.3, 2.0);
  EXPECT_EQ(a(1.0), -0.3);
  const double w = efimov::specfun::omega();
  EXPECT_NEAR(a(4.0), -w * w / 16.0, 1e-16);
  EXPECT_NEAR(a.tail_coefficient(), w * w, 1e-15);

  const auto c = sp::PotentialSpec::cutoff_unitary(10.0);
  EXPECT_EQ(c(11.0), 0.0);
  EXPECT_FALSE(c.inverse_square_tail());

  EXPECT_FALSE(sp::PotentialSpec::local(-0.1).bounded_below());
  EXPECT_TRUE(sp::PotentialSpec::shifted(0.9).bounded_below());
  EXPECT_EQ(sp::PotentialSpec::shifted(0.9).threshold(), 0.0);
}

TEST(Potential, StrengthScalesEverything) {
  const auto a = sp::PotentialSpec::nonlocal_unitary();
  const auto b = a.with_strength(3.0);
  for (double r : {0.1, 1.0, 8.0}) EXPECT_NEAR(b(r), 3.0 * a(r), 1e-16);
  EXPECT_NEAR(b.tail_coefficient(), 3.0 * a.tail_coefficient(), 1e-15);
}

TEST(Potential, RejectsBadParameters) {
  EXPECT_THROW(sp::PotentialSpec::nonlocal_finite(1.0), std::domain_error);
  EXPECT_THROW(sp::PotentialSpec::auxiliary_core(0.1, 1.0), std::domain_error);
  EXPECT_THROW(sp::PotentialSpec::auxiliary_core(-0.1, 0.0), std::domain_error);
  EXPECT_THROW(sp::PotentialSpec::theta_glued(-0.5), std::domain_error);
  EXPECT_THROW(sp::PotentialSpec::cutoff_unitary(0.0), std::domain_error);
  EXPECT_THROW(sp::PotentialSpec::local(0.5), std::domain_error);
}

TEST(Potential, DescriptionsAreDistinct) {
  EXPECT_NE(sp::PotentialSpec::truncated(1).describe(), sp::PotentialSpec::truncated(2).describe());
  EXPECT_FALSE(sp::PotentialSpec::theta_glued(0.9).describe().empty());
}
