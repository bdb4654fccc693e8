#pragma once

#include <span>

#include "hartree/grid.hpp"

namespace hartree::detail {

enum class FftDirection { kForward = -1, kBackward = +1 };

// Unnormalized in-place d-dimensional DFT over the grid's N^d samples.
// Plans are created once per (dim, N, direction) and shared; execution is
// reentrant.
void fft_inplace(const Grid& grid, std::span<complex> data, FftDirection dir);

// Multiplies sample j by (-1)^{sum of axis indices}; maps DFT output to the
// box centred on the origin.
void apply_checkerboard(const Grid& grid, std::span<complex> data) noexcept;

}  // namespace hartree::detail
