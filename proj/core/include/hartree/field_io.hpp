#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "hartree/grid.hpp"

namespace hartree {

// HWF1 layout (all little-endian):
//   bytes 0-3   magic "HWF1"
//   u32         dim
//   u32 x dim   points per axis
//   f64 x dim   box length per axis
//   f64 pairs   (re, im) for N^d samples, row-major
//
// Only cubic grids are produced or accepted.

std::vector<std::uint8_t> encode_field(const Field& u);
Field decode_field(std::span<const std::uint8_t> bytes);

void write_field(const Field& u, const std::filesystem::path& path);
Field read_field(const std::filesystem::path& path);

/// Reads a field and requires it to live on `expected`.
Field read_field(const std::filesystem::path& path, const Grid& expected);

/// Byte size of an HWF1 file on `grid`.
std::size_t encoded_size(const Grid& grid) noexcept;

}  // namespace hartree
