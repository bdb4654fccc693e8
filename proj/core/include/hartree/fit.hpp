#pragma once

#include <span>

namespace hartree {

/// Ordinary least squares y = slope * x + intercept.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;  // standard error of the slope (0 for 2 points)
  double rms_residual = 0.0;
};

/// Requires at least two points with distinct x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Least squares y = a s + b s^2 (no constant term). Returns {a, b}.
struct QuadraticThroughOrigin {
  double linear = 0.0;
  double quadratic = 0.0;
};
QuadraticThroughOrigin fit_linear_quadratic(std::span<const double> s, std::span<const double> y);

}  // namespace hartree
