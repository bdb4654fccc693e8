#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hartree/grid.hpp"

namespace hartree {

/// Superposition of Gaussian wave packets
///   a_j exp(-|x - c_j|^2 / (2 w_j^2)) exp(i p_j . x).
/// Packets are analytic, so the same packet list can be sampled on any grid.
struct WavePacket {
  complex amplitude;
  Point center{};
  double width = 1.0;
  Point momentum{};
};

std::vector<WavePacket> random_wave_packets(int dim, std::mt19937_64& rng, int count = 3,
                                            double center_spread = 4.0, double max_momentum = 2.0);

Field sample_packets(const Grid& grid, const std::vector<WavePacket>& packets);

/// Random spectrum with standard normal entries on |k_a| <= k_max (every
/// axis), zero elsewhere.
Field random_band_limited(const Grid& grid, std::mt19937_64& rng, long k_max);

}  // namespace hartree
