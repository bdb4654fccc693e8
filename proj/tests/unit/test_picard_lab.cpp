#include <gtest/gtest.h>

#include <cmath>

#include "hartree/dynamics.hpp"
#include "hartree/error.hpp"
#include "hartree/picard_lab.hpp"
#include "hartree/propagator.hpp"
#include "support.hpp"

using namespace hartree;

namespace {
const std::vector<double> kSweep{1.0, 0.7, 0.5, 0.35, 0.25, 0.18, 0.125};
}

TEST(ScaledFamily, CoScaledGridsReuseSamples) {
  const ScaledFamily fam = gaussian_family(Grid(1, 256, 40.0), 1.0, {1.0, 0.5, 0.25});
  EXPECT_DOUBLE_EQ(fam.grid_for(0.25).length(), 160.0);
  const Field m = fam.member(0.5);
  EXPECT_EQ(m.grid().n(), 256u);
  // f^h(x) = f(h x) at the co-scaled sample points
  for (std::size_t j = 0; j < 256; j += 17)
    EXPECT_NEAR(m[j].real(), std::exp(-0.5 * std::pow(0.5 * m.grid().position(j), 2)), 1e-15);
  EXPECT_NEAR(norm_wiener(m), norm_wiener(fam.base()), 1e-12);
  EXPECT_NEAR(norm_lp(m, 2.0) * std::sqrt(0.5), norm_lp(fam.base(), 2.0), 1e-12);
  EXPECT_THROW(ScaledFamily(fam.base(), {1.0, 1.0}), DomainError);
  EXPECT_THROW(ScaledFamily(fam.base(), {1.5, 1.0}), DomainError);
}

TEST(SecondIterate, TrivialCases) {
  const Grid g(1, 256, 40.0);
  const Field f = gaussian(g);
  const Kernel k = materialize(Homogeneous{1.0, 0.4}, g);
  EXPECT_EQ(test::max_abs(second_iterate(f, k, 0.0, 32)), 0.0);
  EXPECT_EQ(test::max_abs(second_iterate(f, materialize(Homogeneous{0.0, 0.4}, g), 0.1, 32)), 0.0);
  EXPECT_THROW(second_iterate(f, k, 0.1, 8), DomainError);
  EXPECT_THROW(second_iterate(f, k, -0.1, 32), DomainError);
}

TEST(SecondIterate, ConvergesInQuadratureNodes) {
  const Grid g(1, 512, 40.0);
  const Field f = gaussian(g, 1.0, 1.5);
  const Kernel k = materialize(Homogeneous{1.0, 0.4}, g);
  const Field coarse = second_iterate(f, k, 0.2, 32);
  const Field fine = second_iterate(f, k, 0.2, 63);
  const Field finest = second_iterate(f, k, 0.2, 125);
  const double e1 = norm_wiener(coarse - finest), e2 = norm_wiener(fine - finest);
  EXPECT_LT(e2, e1);
  EXPECT_LT(e2 / norm_wiener(finest), 1e-4);
}

TEST(SecondIterate, SmallTimeLimitIsTheNonlinearity) {
  const Grid g(1, 1024, 40.0);
  const Field f = gaussian(g);
  const Kernel k = materialize(Homogeneous{1.0, 0.4}, g);
  const double s = 1e-3;
  EXPECT_NEAR(norm_wiener(second_iterate(f, k, s, 64)) / s / norm_wiener(hartree_rhs(f, k)), 1.0, 1e-2);
}

TEST(ScalingIdentity, ResidualAcrossTheFamily) {
  const ScaledFamily fam = gaussian_family(Grid(1, 2048, 40.0), 1.0, {1.0, 0.5, 0.25});
  const Homogeneous spec{1.0, 0.4};
  EXPECT_LE(scaling_identity_residual(fam, spec, 0.1, 1.0, 64), 1e-12);
  EXPECT_LE(scaling_identity_residual(fam, spec, 0.1, 0.5, 64), 1e-2);
  EXPECT_LE(scaling_identity_residual(fam, spec, 0.1, 0.25, 64), 2e-2);
  EXPECT_THROW(scaling_identity_residual(fam, TruncatedLow{0.4, 1.0}, 0.1, 0.5, 64), UnsupportedKernelError);
  EXPECT_THROW(scaling_identity_residual(fam, spec, 0.1, 0.3, 64), DomainError);
}

TEST(Inflation, HomogeneousSlope) {
  const ScaledFamily fam = gaussian_family(Grid(1, 2048, 40.0), 1.0, kSweep);
  const InflationReport r = inflation_sweep(fam, Homogeneous{1.0, 0.4}, 0.05, 64);
  ASSERT_TRUE(r.fit_valid);
  EXPECT_NEAR(r.fit.slope, -0.6, 0.1);
  EXPECT_NEAR(r.compensated.back() / (0.05 * r.g0_wiener), 1.0, 0.05);
  EXPECT_NEAR(r.decay_exponent, 0.6, 1e-15);
}

TEST(Inflation, TruncatedGrowsAndReportsTailBound) {
  const ScaledFamily fam = gaussian_family(Grid(1, 2048, 40.0), 1.0, kSweep);
  const InflationReport r = inflation_sweep(fam, TruncatedLow{0.4, 1.0}, 0.05, 64);
  for (std::size_t i = 1; i < r.d_wiener.size(); ++i) EXPECT_GT(r.d_wiener[i], r.d_wiener[i - 1]);
  ASSERT_EQ(r.tail_bound.size(), kSweep.size());
  EXPECT_NEAR(r.tail_q, 2.0 / 0.6, 1e-12);
  for (std::size_t i = 1; i < r.tail_bound.size(); ++i) EXPECT_LT(r.tail_bound[i], r.tail_bound[i - 1]);
}

TEST(Inflation, DegenerateInputs) {
  const ScaledFamily two = gaussian_family(Grid(1, 256, 40.0), 1.0, {1.0, 0.5});
  EXPECT_THROW(inflation_sweep(two, Homogeneous{1.0, 0.4}, 0.05, 32), DomainError);
  const ScaledFamily fam = gaussian_family(Grid(1, 256, 40.0), 1.0, kSweep);
  const InflationReport r = inflation_sweep(fam, Homogeneous{0.0, 0.4}, 0.05, 32);
  EXPECT_FALSE(r.fit_valid);
  for (double v : r.d_wiener) EXPECT_EQ(v, 0.0);
}

TEST(Taylor, LinearCoefficientAndRemainderOrder) {
  const Grid g(1, 1024, 40.0);
  const Field f = gaussian(g);
  const Kernel k = materialize(Homogeneous{1.0, 0.4}, g);
  const TaylorFit fit = taylor_fit(f, k, {1e-2, 7e-3, 5e-3, 3e-3, 2e-3, 1e-3}, 64);
  EXPECT_NEAR(fit.linear_coeff / fit.g0_wiener, 1.0, 1e-2);
  ASSERT_TRUE(fit.remainder_fit_valid);
  EXPECT_GE(fit.remainder_order, 1.9);

  const TaylorFit zero = taylor_fit(f, materialize(Homogeneous{0.0, 0.4}, g), {1e-2, 5e-3, 2e-3, 1e-3}, 32);
  EXPECT_EQ(zero.linear_coeff, 0.0);
  EXPECT_THROW(taylor_fit(f, k, {1e-2, 5e-3, 2e-3}, 32), DomainError);
  EXPECT_THROW(taylor_fit(f, k, {1e-2, 8e-3, 6e-3, 4e-3}, 32), DomainError);  // under a decade
}
