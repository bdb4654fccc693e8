#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "hartree/grid.hpp"

namespace hartree::test {

inline double max_abs_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const Field& a) {
  double m = 0.0;
  for (auto v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

/// White-noise samples, not band-limited.
inline Field random_field(const Grid& grid, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Field u(grid);
  for (auto& v : u.values()) v = complex(n(rng), n(rng));
  return u;
}

}  // namespace hartree::test
