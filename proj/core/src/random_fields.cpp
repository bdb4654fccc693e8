#include "hartree/random_fields.hpp"

#include <cmath>
#include <cstdlib>

#include "hartree/error.hpp"

namespace hartree {

std::vector<WavePacket> random_wave_packets(int dim, std::mt19937_64& rng, int count, double center_spread,
                                            double max_momentum) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> width(0.6, 1.5);
  std::vector<WavePacket> out;
  for (int j = 0; j < count; ++j) {
    WavePacket p;
    p.amplitude = complex(normal(rng), normal(rng));
    for (int a = 0; a < dim; ++a) {
      p.center[a] = center_spread * unit(rng);
      p.momentum[a] = max_momentum * unit(rng);
    }
    p.width = width(rng);
    out.push_back(p);
  }
  return out;
}

Field sample_packets(const Grid& grid, const std::vector<WavePacket>& packets) {
  return sample(grid, [&](const Point& x) {
    complex sum{};
    for (const auto& p : packets) {
      double r2 = 0.0, phase = 0.0;
      for (int a = 0; a < grid.dim(); ++a) {
        const double dxa = x[a] - p.center[a];
        r2 += dxa * dxa;
        phase += p.momentum[a] * x[a];
      }
      sum += p.amplitude * std::exp(-r2 / (2.0 * p.width * p.width)) * complex(std::cos(phase), std::sin(phase));
    }
    return sum;
  });
}

Field random_band_limited(const Grid& grid, std::mt19937_64& rng, long k_max) {
  if (k_max < 0) throw DomainError("random_band_limited: k_max must be >= 0");
  std::normal_distribution<double> normal(0.0, 1.0);
  SpectralField s(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto idx = grid.unravel(i);
    bool inside = true;
    for (int a = 0; a < grid.dim(); ++a) inside = inside && std::labs(grid.wavenumber(idx[a])) <= k_max;
    if (inside) s[i] = complex(normal(rng), normal(rng));
  }
  return inverse(s);
}

}  // namespace hartree
