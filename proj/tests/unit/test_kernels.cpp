#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "hartree/dynamics.hpp"
#include "hartree/error.hpp"
#include "hartree/field_io.hpp"
#include "hartree/kernels.hpp"
#include "support.hpp"

using namespace hartree;

namespace {

// 3D radial transform of |x|^{-1} exp(-(r/sigma)^2) times |xi|^2, by Simpson's
// rule on the 1D integral sqrt(2/pi)/xi * int_0^inf exp(-(r/sigma)^2) sin(r xi) dr.
double radial_probe_3d(double xi, double sigma) {
  const double upper = 8.0 * sigma;
  const int panels = 400000;
  const double h = upper / panels;
  double acc = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double r = i * h;
    const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * std::exp(-(r / sigma) * (r / sigma)) * std::sin(r * xi);
  }
  acc *= h / 3.0;
  return std::sqrt(2.0 / kPi) / xi * acc * xi * xi;
}

}  // namespace

TEST(KernelConstant, KnownValues) {
  EXPECT_NEAR(homogeneous_constant(0.4, 1), 0.698408, 1e-6);
  EXPECT_NEAR(homogeneous_constant(1.0, 3), std::sqrt(2.0 / kPi), 1e-14);
  // Coulomb-like d=2, gamma=1: 2^{0} Gamma(1/2) / Gamma(1/2) = 1
  EXPECT_NEAR(homogeneous_constant(1.0, 2), 1.0, 1e-14);
  EXPECT_THROW(homogeneous_constant(1.0, 1), DomainError);
  EXPECT_THROW(homogeneous_constant(0.0, 1), DomainError);
}

TEST(KernelConstant, ThreeDimensionalRadialOracle) {
  // the mollified transform tends to C(1,3) |xi|^{-2} as sigma grows; the
  // mollifier bias is O((sigma xi)^{-2})
  for (double sigma : {40.0, 80.0}) {
    for (double xi : {2.0, 3.0}) {
      EXPECT_NEAR(radial_probe_3d(xi, sigma) / homogeneous_constant(1.0, 3), 1.0, 1e-3)
          << "sigma=" << sigma << " xi=" << xi;
    }
  }
}

TEST(Kernel, ValidateRejectsOutOfRange) {
  EXPECT_THROW(validate(Homogeneous{1.0, 1.2}, 1), DomainError);
  EXPECT_THROW(validate(TruncatedLow{0.4, 0.0}, 1), DomainError);
  EXPECT_THROW(validate(Tail{0.4, 1.5}, 1), DomainError);
  EXPECT_THROW(validate(FromFile{""}, 1), DomainError);
  EXPECT_NO_THROW(validate(Delta{}, 3));
  EXPECT_EQ(kernel_name(TruncatedLow{}), "truncated");
}

TEST(Kernel, HomogeneousMultiplierAndZeroMode) {
  const Grid g(1, 64, 10.0);
  const Kernel k = materialize(Homogeneous{2.0, 0.4}, g, ZeroModePolicy{3.5});
  EXPECT_EQ(k.multiplier()[0], 3.5);
  const double xi = g.frequency(5);
  EXPECT_NEAR(k.multiplier()[5], 2.0 * homogeneous_constant(0.4, 1) * std::pow(xi, -0.6), 1e-14);
  EXPECT_TRUE(materialize(Homogeneous{0.0, 0.4}, g).is_zero());
}

TEST(Kernel, RadialSymmetryIn2D) {
  const Grid g(2, 32, 8.0);
  const Kernel k = materialize(Homogeneous{1.0, 0.7}, g);
  const auto m = k.multiplier();
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j) EXPECT_EQ(m[i * g.n() + j], m[j * g.n() + i]);
  EXPECT_EQ(m[1 * g.n() + 2], m[(g.n() - 1) * g.n() + (g.n() - 2)]);
}

TEST(Kernel, DeltaConvolutionIsIdentity) {
  // dense enough that |u|^2 is resolved inside the dealiasing band
  const Grid g(2, 96, 24.0);
  const Field u = gaussian(g, 1.5);
  Field rho(g);
  for (std::size_t i = 0; i < g.size(); ++i) rho[i] = std::norm(u[i]);
  const Field v = hartree_potential(u, materialize(Delta{}, g));
  EXPECT_LT(test::max_abs_diff(v, rho), 1e-12);
}

TEST(Kernel, SpectralConvolutionMatchesDirectSum) {
  // K(x) = exp(-x^2/2) has Khat = exp(-xi^2/2); an asymmetric density checks orientation.
  const Grid g(1, 256, 40.0);
  std::vector<double> mult(g.size());
  for (std::size_t j = 0; j < g.n(); ++j) mult[j] = std::exp(-0.5 * g.frequency(j) * g.frequency(j));
  const Kernel k(g, mult, FromFile{"<gaussian>"}, {});
  const Field u = sample(g, [](const Point& x) {
    return complex(std::exp(-(x[0] - 3.0) * (x[0] - 3.0)), 0.5 * std::exp(-0.5 * (x[0] + 4.0) * (x[0] + 4.0)));
  });
  const Field v = hartree_potential(u, k);
  double err = 0.0;
  for (std::size_t i = 0; i < g.n(); ++i) {
    double direct = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j) {
      const double r = g.position(i) - g.position(j);
      direct += g.dx() * std::exp(-0.5 * r * r) * std::norm(u[j]);
    }
    err = std::max(err, std::abs(v[i] - direct));
  }
  EXPECT_LT(err, 1e-10);
}

TEST(Kernel, SplitIsAnExactPartition) {
  const Grid g(2, 32, 20.0);
  const Kernel k = materialize(Homogeneous{1.0, 0.5}, g);
  const auto [low, high] = split_low_high(k, 1.0);
  const auto xi2 = g.frequency_norm_squared();
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(low.multiplier()[i] + high.multiplier()[i], k.multiplier()[i]);
    EXPECT_TRUE(low.multiplier()[i] == 0.0 || high.multiplier()[i] == 0.0);
    if (xi2[i] > 1.0) EXPECT_EQ(low.multiplier()[i], 0.0);
  }
}

TEST(Kernel, FileRoundTripUsesAscendingOrder) {
  const Grid g(1, 16, 5.0);
  Field spectrum(g);
  // file sample i holds wavenumber i - N/2
  for (std::size_t i = 0; i < g.n(); ++i) spectrum[i] = complex(static_cast<double>(i) - 8.0, 0.0);
  const auto path = std::filesystem::temp_directory_path() / "hartree_kernel_test.hwf";
  write_field(spectrum, path);
  const Kernel k = materialize(FromFile{path}, g);
  for (std::size_t j = 0; j < g.n(); ++j) EXPECT_EQ(k.multiplier()[j], static_cast<double>(g.wavenumber(j)));

  spectrum[2] = complex(1.0, 1e-3);
  write_field(spectrum, path);
  EXPECT_THROW(materialize(FromFile{path}, g), FormatError);
  EXPECT_THROW(materialize(FromFile{path}, Grid(1, 32, 5.0)), GridMismatchError);
  std::filesystem::remove(path);
}

TEST(TailNorm, MatchesClosedFormAndSlope) {
  const Grid g(1, 4096, 200.0);
  const double gamma = 0.4;
  for (double q : {2.5, 10.0 / 3.0, 6.0}) {
    std::vector<double> lh, lv;
    for (double h : {1.0, 0.5, 0.25, 0.125}) {
      const LqNorm num = multiplier_lq_norm(materialize(Tail{gamma, h}, g), q);
      const LqNorm exact = tail_lq_norm_closed_form(gamma, h, q, 1);
      ASSERT_FALSE(num.divergent);
      EXPECT_NEAR(num.value / exact.value, 1.0, 1e-3) << "q=" << q << " h=" << h;
      lh.push_back(std::log(h));
      lv.push_back(std::log(num.value));
    }
    const double slope = (lv.back() - lv.front()) / (lh.back() - lh.front());
    EXPECT_NEAR(slope, 1.0 - gamma - 1.0 / q, 0.02);
  }
}

TEST(TailNorm, DivergenceFlags) {
  const Grid g(1, 256, 40.0);
  EXPECT_TRUE(multiplier_lq_norm(materialize(Tail{0.4, 1.0}, g), 1.5).divergent);  // (d-gamma) q <= d
  EXPECT_TRUE(multiplier_lq_norm(materialize(Homogeneous{1.0, 0.4}, g), 3.0).divergent);
  EXPECT_TRUE(multiplier_lq_norm(materialize(TruncatedLow{0.4, 1.0}, g), 2.0).divergent);
  EXPECT_FALSE(multiplier_lq_norm(materialize(TruncatedLow{0.4, 1.0}, g), 1.5).divergent);
  EXPECT_TRUE(std::isinf(multiplier_lq_norm(materialize(Tail{0.4, 1.0}, g), 1.0).value));
  EXPECT_TRUE(tail_lq_norm_closed_form(0.4, 1.0, 1.5, 1).divergent);
  EXPECT_NEAR(tail_lq_norm_closed_form(0.4, 0.5, kInfinity, 1).value, std::pow(0.5, 0.6), 1e-14);
}

TEST(TruncatedNorm, MatchesRadialIntegral) {
  // int_{|xi|<=1} |xi|^{-0.6 q} dxi = 2 / (1 - 0.6 q) for q = 1.5
  const Grid g(1, 4096, 400.0);
  const LqNorm n = multiplier_lq_norm(materialize(TruncatedLow{0.4, 1.0}, g), 1.5);
  EXPECT_NEAR(n.value / std::pow(2.0 / (1.0 - 0.9), 1.0 / 1.5), 1.0, 2e-2);
}
