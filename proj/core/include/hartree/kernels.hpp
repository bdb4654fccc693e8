#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hartree/grid.hpp"

namespace hartree {

/// K(x) = lambda |x|^{-gamma}; multiplier lambda C(gamma,d) |xi|^{gamma-d}.
struct Homogeneous {
  double lambda = 1.0;
  double gamma = 0.5;
};

/// Multiplier |xi|^{gamma-d} on |xi| <= radius, zero outside.
struct TruncatedLow {
  double gamma = 0.5;
  double radius = 1.0;
};

/// Multiplier |xi|^{gamma-d} on |xi| > 1/h, zero inside.
struct Tail {
  double gamma = 0.5;
  double h = 1.0;
};

/// Real multiplier read from an HWF1 file. Samples are ordered by ascending
/// wavenumber k = -N/2 .. N/2-1 per axis and must have zero imaginary part.
struct FromFile {
  std::filesystem::path path;
};

/// K = delta: constant multiplier (2 pi)^{-d/2}, so K * g = g.
struct Delta {};

using KernelSpec = std::variant<Homogeneous, TruncatedLow, Tail, FromFile, Delta>;

std::string kernel_name(const KernelSpec& spec);

/// Throws DomainError if the spec is invalid in dimension `dim`.
void validate(const KernelSpec& spec, int dim);

/// Value assigned at xi = 0 for kernels singular there.
struct ZeroModePolicy {
  double value = 0.0;
};

/// Multiplier sampled on a grid (FFT storage order).
class Kernel {
 public:
  Kernel(Grid grid, std::vector<double> multiplier, KernelSpec spec, ZeroModePolicy policy);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> multiplier() const noexcept { return multiplier_; }
  const KernelSpec& spec() const noexcept { return spec_; }
  const ZeroModePolicy& zero_mode_policy() const noexcept { return policy_; }
  bool is_zero() const noexcept;

 private:
  Grid grid_;
  std::vector<double> multiplier_;
  KernelSpec spec_;
  ZeroModePolicy policy_;
};

/// C(gamma, d) = 2^{d/2-gamma} Gamma((d-gamma)/2) / Gamma(gamma/2), the
/// constant in FT[|x|^{-gamma}] = C |xi|^{gamma-d}. Requires 0 < gamma < d.
double homogeneous_constant(double gamma, int dim);

Kernel materialize(const KernelSpec& spec, const Grid& grid, ZeroModePolicy policy = {});

/// Low part |xi| <= radius and high part |xi| > radius; low + high reproduces
/// the multiplier exactly.
std::pair<Kernel, Kernel> split_low_high(const Kernel& k, double radius = 1.0);

struct LqNorm {
  double value = 0.0;      // +inf when divergent
  bool divergent = false;  // continuum integral does not converge
};

/// L^q norm of the multiplier over frequency space (q = inf gives the max).
///
/// Kernels built from analytic specs use a cut-aware rule: samples within half
/// a cell of an indicator edge are weighted by the fraction of their cell on
/// the support side, and the closed-form contribution beyond the largest
/// inscribed frequency ball is added. Other kernels use the plain dxi^d sum.
LqNorm multiplier_lq_norm(const Kernel& k, double q);

/// Surface measure of the unit sphere in R^d.
double unit_sphere_area(int dim);

/// Closed-form ||Tail multiplier||_{L^q}; divergent when (d-gamma) q <= d.
LqNorm tail_lq_norm_closed_form(double gamma, double h, double q, int dim);

}  // namespace hartree
