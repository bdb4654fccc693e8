#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace hartree {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr int kMaxDim = 3;

using Point = std::array<double, kMaxDim>;

/// Cubic periodic box [-L/2, L/2)^d with N points per axis.
///
/// Physical samples sit at x_j = -L/2 + j*dx. Spectral samples are stored
/// in FFT order: storage index j on an axis holds wavenumber k = j for
/// j < N/2 and k = j - N otherwise, at frequency xi_k = k*dxi.
class Grid {
 public:
  Grid(int dim, std::size_t n, double length);

  int dim() const noexcept { return dim_; }
  std::size_t n() const noexcept { return n_; }
  double length() const noexcept { return length_; }

  double dx() const noexcept { return length_ / static_cast<double>(n_); }
  double dxi() const noexcept { return 2.0 * kPi / length_; }
  double cell_volume() const noexcept;
  double spectral_cell_volume() const noexcept;
  std::size_t size() const noexcept { return size_; }

  double position(std::size_t j) const noexcept {
    return -0.5 * length_ + static_cast<double>(j) * dx();
  }
  long wavenumber(std::size_t j) const noexcept {
    return j < n_ / 2 ? static_cast<long>(j)
                      : static_cast<long>(j) - static_cast<long>(n_);
  }
  double frequency(std::size_t j) const noexcept {
    return static_cast<double>(wavenumber(j)) * dxi();
  }

  /// Per-axis indices of a flat row-major index (unused axes are zero).
  std::array<std::size_t, kMaxDim> unravel(std::size_t flat) const noexcept;
  Point position_of(std::size_t flat) const noexcept;
  Point frequency_of(std::size_t flat) const noexcept;

  /// |xi|^2 for every spectral storage index.
  std::vector<double> frequency_norm_squared() const;

  /// Same dimension and N, different box length.
  Grid with_length(double length) const { return Grid(dim_, n_, length); }

  bool operator==(const Grid& other) const noexcept {
    return dim_ == other.dim_ && n_ == other.n_ && length_ == other.length_;
  }

 private:
  int dim_;
  std::size_t n_;
  double length_;
  std::size_t size_;
};

namespace detail {

template <class Tag>
class Sampled {
 public:
  explicit Sampled(Grid grid) : grid_(std::move(grid)), values_(grid_.size()) {}
  Sampled(Grid grid, std::vector<complex> values);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const complex> values() const noexcept { return values_; }
  std::span<complex> values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  complex operator[](std::size_t i) const noexcept { return values_[i]; }
  complex& operator[](std::size_t i) noexcept { return values_[i]; }

  bool all_finite() const noexcept;

  Sampled& operator+=(const Sampled& rhs);
  Sampled& operator-=(const Sampled& rhs);
  Sampled& operator*=(complex s) noexcept;

  friend Sampled operator+(Sampled a, const Sampled& b) { return a += b; }
  friend Sampled operator-(Sampled a, const Sampled& b) { return a -= b; }
  friend Sampled operator*(complex s, Sampled a) { return a *= s; }
  friend Sampled operator*(Sampled a, complex s) { return a *= s; }

 private:
  Grid grid_;
  std::vector<complex> values_;
};

struct PhysicalTag {};
struct SpectralTag {};

}  // namespace detail

/// Complex samples u(x_j), row-major.
using Field = detail::Sampled<detail::PhysicalTag>;
/// Complex samples of the transform at xi_k, FFT storage order.
using SpectralField = detail::Sampled<detail::SpectralTag>;

/// Samples fn(x) at every grid point.
Field sample(const Grid& grid, const std::function<complex(const Point&)>& fn);

/// Gaussian amplitude * exp(-|x|^2 / (2 width^2)).
Field gaussian(const Grid& grid, double width = 1.0, double amplitude = 1.0);

/// Pointwise complex conjugate.
Field conj(Field u);

/// Quadrature transform with the unitary (2 pi)^{-d/2} convention:
///   uhat(xi_k) = (2 pi)^{-d/2} dx^d sum_j exp(-i x_j . xi_k) u(x_j).
SpectralField forward(const Field& u);

/// Inverse of forward(); exact up to rounding.
Field inverse(const SpectralField& v);

/// L^2 mass in the outer shell of relative width `margin` (within margin*L of
/// the periodic seam on any axis), divided by the total mass. Cells straddling
/// the shell edge contribute their overlapping fraction.
double boundary_mass_fraction(const Field& u, double margin);

/// Sum with a fixed pairwise reduction tree; result is independent of threads.
double pairwise_sum(std::span<const double> xs) noexcept;

/// Throws GridMismatchError unless a and b are equal.
void require_same_grid(const Grid& a, const Grid& b, const char* what);

}  // namespace hartree
