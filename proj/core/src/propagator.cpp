#include "hartree/propagator.hpp"

#include <cmath>

#include "hartree/error.hpp"

namespace hartree {

void free_evolve_spectrum(SpectralField& uhat, std::span<const double> xi2, double t) {
  if (t == 0.0) return;
  auto vals = uhat.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double phase = -t * xi2[i];
    vals[i] *= complex(std::cos(phase), std::sin(phase));
  }
}

Field free_evolve(const Field& u, double t) {
  if (t == 0.0) return u;
  SpectralField uhat = forward(u);
  free_evolve_spectrum(uhat, u.grid().frequency_norm_squared(), t);
  return inverse(uhat);
}

Trajectory free_trajectory(const Field& u0, double horizon, std::size_t samples) {
  if (samples < 2) throw DomainError("free_trajectory: need at least 2 samples");
  if (!(horizon > 0.0)) throw DomainError("free_trajectory: horizon must be positive");
  const auto xi2 = u0.grid().frequency_norm_squared();
  const SpectralField u0hat = forward(u0);
  Trajectory tr;
  tr.push_back(0.0, u0);
  for (std::size_t m = 1; m < samples; ++m) {
    const double t = horizon * static_cast<double>(m) / static_cast<double>(samples - 1);
    SpectralField s = u0hat;
    free_evolve_spectrum(s, xi2, t);
    tr.push_back(t, inverse(s));
  }
  return tr;
}

double strichartz_ratio(const Field& u0, const AdmissiblePair& pair, double horizon, std::size_t samples) {
  if (samples < 16) throw DomainError("strichartz_ratio: need at least 16 time samples");
  const double mass = norm_lp(u0, 2.0);
  if (mass == 0.0) throw DomainError("strichartz_ratio: initial datum is zero");
  return spacetime_norm(free_trajectory(u0, horizon, samples), pair.p, pair.q) / mass;
}

}  // namespace hartree
