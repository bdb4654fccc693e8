#pragma once

#include <cstddef>

namespace hartree {

/// Numerical estimate of C(gamma, 1) from the transform of the mollified
/// kernel |x|^{-gamma} exp(-(x/sigma)^2) on an N-point box of length L.
///
/// The singular sample at x = 0 carries the zeta-function endpoint correction
/// -2 zeta(gamma) dx^{-gamma}, which cancels the leading error of the
/// punctured trapezoid sum. The estimate is the mean of uhat(xi) / |xi|^{gamma-1}
/// over grid frequencies in [xi_lo, xi_hi].
struct ConstantProbe {
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::size_t samples = 0;
};

ConstantProbe probe_homogeneous_constant(double gamma, double sigma, std::size_t n, double length, double xi_lo,
                                         double xi_hi);

}  // namespace hartree
