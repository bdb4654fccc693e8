#include "hartree/fit.hpp"

#include <cmath>

#include "hartree/error.hpp"

namespace hartree {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("fit_line: need >= 2 paired points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw DomainError("fit_line: x values are all equal");

  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    ss += r * r;
  }
  f.rms_residual = std::sqrt(ss / n);
  if (x.size() > 2) f.slope_stderr = std::sqrt(ss / (n - 2.0) / sxx);
  return f;
}

QuadraticThroughOrigin fit_linear_quadratic(std::span<const double> s, std::span<const double> y) {
  if (s.size() != y.size() || s.size() < 2) throw DomainError("fit_linear_quadratic: need >= 2 paired points");
  // Normal equations for the basis {s, s^2}.
  double s2 = 0.0, s3 = 0.0, s4 = 0.0, ys = 0.0, ys2 = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double a = s[i], a2 = a * a;
    s2 += a2;
    s3 += a2 * a;
    s4 += a2 * a2;
    ys += y[i] * a;
    ys2 += y[i] * a2;
  }
  const double det = s2 * s4 - s3 * s3;
  if (!(std::abs(det) > 1e-300)) throw DomainError("fit_linear_quadratic: singular design");
  return {(ys * s4 - ys2 * s3) / det, (s2 * ys2 - s3 * ys) / det};
}

}  // namespace hartree
