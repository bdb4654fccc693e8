#pragma once

#include "hartree/grid.hpp"
#include "hartree/norms.hpp"

namespace hartree {

/// e^{it Delta} u: multiplies the spectrum by exp(-i t |xi|^2). t = 0 returns
/// u unchanged.
Field free_evolve(const Field& u, double t);

/// In-place spectral form of free_evolve for callers already in frequency
/// space. `xi2` is grid.frequency_norm_squared().
void free_evolve_spectrum(SpectralField& uhat, std::span<const double> xi2, double t);

/// Free trajectory sampled at `samples` equispaced times on [0, horizon].
Trajectory free_trajectory(const Field& u0, double horizon, std::size_t samples);

/// ||e^{it Delta} u0||_{L^p([0,T]; L^q)} / ||u0||_{L^2} with M equispaced time
/// samples. Requires u0 != 0 and M >= 16.
double strichartz_ratio(const Field& u0, const AdmissiblePair& pair, double horizon, std::size_t samples);

}  // namespace hartree
