#include "hartree/kernel_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hartree/error.hpp"
#include "hartree/grid.hpp"

namespace hartree {

ConstantProbe probe_homogeneous_constant(double gamma, double sigma, std::size_t n, double length, double xi_lo,
                                         double xi_hi) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("kernel probe: gamma must lie in (0, 1)");
  if (!(sigma > 0.0)) throw DomainError("kernel probe: sigma must be positive");
  if (!(xi_lo > 0.0 && xi_hi > xi_lo)) throw DomainError("kernel probe: need 0 < xi_lo < xi_hi");
  const Grid grid(1, n, length);
  const double dx = grid.dx();
  Field u = sample(grid, [&](const Point& x) {
    const double r = std::abs(x[0]);
    if (r == 0.0) return complex(-2.0 * std::riemann_zeta(gamma) * std::pow(dx, -gamma), 0.0);
    return complex(std::pow(r, -gamma) * std::exp(-(r / sigma) * (r / sigma)), 0.0);
  });
  const SpectralField uhat = forward(u);

  ConstantProbe p;
  p.min_ratio = std::numeric_limits<double>::max();
  double sum = 0.0;
  for (std::size_t j = 0; j < grid.n(); ++j) {
    const double xi = std::abs(grid.frequency(j));
    if (xi < xi_lo || xi > xi_hi) continue;
    const double ratio = uhat[j].real() / std::pow(xi, gamma - 1.0);
    sum += ratio;
    p.min_ratio = std::min(p.min_ratio, ratio);
    p.max_ratio = std::max(p.max_ratio, ratio);
    ++p.samples;
  }
  if (p.samples == 0) throw DomainError("kernel probe: no grid frequencies in the requested band");
  p.mean_ratio = sum / static_cast<double>(p.samples);
  return p;
}

}  // namespace hartree
