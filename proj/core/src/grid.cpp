#include "hartree/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fft.hpp"
#include "hartree/error.hpp"

namespace hartree {

Grid::Grid(int dim, std::size_t n, double length) : dim_(dim), n_(n), length_(length) {
  if (dim < 1 || dim > kMaxDim) throw DomainError("grid dimension must be 1, 2 or 3");
  if (n < 2 || n % 2 != 0) throw DomainError("points per axis must be even and >= 2");
  if (!(length > 0.0) || !std::isfinite(length))
    throw DomainError("box length must be positive and finite");
  size_ = 1;
  for (int i = 0; i < dim; ++i) size_ *= n;
}

double Grid::cell_volume() const noexcept { return std::pow(dx(), dim_); }

double Grid::spectral_cell_volume() const noexcept { return std::pow(dxi(), dim_); }

std::array<std::size_t, kMaxDim> Grid::unravel(std::size_t flat) const noexcept {
  std::array<std::size_t, kMaxDim> idx{};
  for (int axis = dim_ - 1; axis >= 0; --axis) {
    idx[static_cast<std::size_t>(axis)] = flat % n_;
    flat /= n_;
  }
  return idx;
}

Point Grid::position_of(std::size_t flat) const noexcept {
  auto idx = unravel(flat);
  Point x{};
  for (int a = 0; a < dim_; ++a) x[a] = position(idx[a]);
  return x;
}

Point Grid::frequency_of(std::size_t flat) const noexcept {
  auto idx = unravel(flat);
  Point xi{};
  for (int a = 0; a < dim_; ++a) xi[a] = frequency(idx[a]);
  return xi;
}

std::vector<double> Grid::frequency_norm_squared() const {
  std::vector<double> axis(n_);
  for (std::size_t j = 0; j < n_; ++j) axis[j] = frequency(j) * frequency(j);
  std::vector<double> out(size_);
  for (std::size_t flat = 0; flat < size_; ++flat) {
    auto idx = unravel(flat);
    double s = 0.0;
    for (int a = 0; a < dim_; ++a) s += axis[idx[a]];
    out[flat] = s;
  }
  return out;
}

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
  if (!(a == b)) throw GridMismatchError(std::string(what) + ": operands live on different grids");
}

namespace detail {

template <class Tag>
Sampled<Tag>::Sampled(Grid grid, std::vector<complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw GridMismatchError("sample count " + std::to_string(values_.size()) +
                            " does not match grid size " + std::to_string(grid_.size()));
}

template <class Tag>
bool Sampled<Tag>::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

template <class Tag>
Sampled<Tag>& Sampled<Tag>::operator+=(const Sampled& rhs) {
  require_same_grid(grid_, rhs.grid_, "field addition");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

template <class Tag>
Sampled<Tag>& Sampled<Tag>::operator-=(const Sampled& rhs) {
  require_same_grid(grid_, rhs.grid_, "field subtraction");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
  return *this;
}

template <class Tag>
Sampled<Tag>& Sampled<Tag>::operator*=(complex s) noexcept {
  for (auto& v : values_) v *= s;
  return *this;
}

template class Sampled<PhysicalTag>;
template class Sampled<SpectralTag>;

}  // namespace detail

Field sample(const Grid& grid, const std::function<complex(const Point&)>& fn) {
  Field u(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) u[i] = fn(grid.position_of(i));
  return u;
}

Field gaussian(const Grid& grid, double width, double amplitude) {
  const double inv = 1.0 / (2.0 * width * width);
  return sample(grid, [&](const Point& x) {
    double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    return complex(amplitude * std::exp(-r2 * inv), 0.0);
  });
}

Field conj(Field u) {
  for (auto& v : u.values()) v = std::conj(v);
  return u;
}

SpectralField forward(const Field& u) {
  if (!u.all_finite()) throw InvalidFieldError("forward: field contains non-finite samples");
  const Grid& g = u.grid();
  std::vector<complex> data(u.values().begin(), u.values().end());
  detail::fft_inplace(g, data, detail::FftDirection::kForward);
  detail::apply_checkerboard(g, data);
  const double scale = std::pow(2.0 * kPi, -0.5 * g.dim()) * g.cell_volume();
  for (auto& v : data) v *= scale;
  return SpectralField(g, std::move(data));
}

Field inverse(const SpectralField& v) {
  if (!v.all_finite()) throw InvalidFieldError("inverse: spectrum contains non-finite samples");
  const Grid& g = v.grid();
  std::vector<complex> data(v.values().begin(), v.values().end());
  detail::apply_checkerboard(g, data);
  detail::fft_inplace(g, data, detail::FftDirection::kBackward);
  const double scale = std::pow(2.0 * kPi, -0.5 * g.dim()) * g.spectral_cell_volume();
  for (auto& x : data) x *= scale;
  return Field(g, std::move(data));
}

double boundary_mass_fraction(const Field& u, double margin) {
  if (!(margin > 0.0 && margin < 0.5)) throw DomainError("margin must lie in (0, 1/2)");
  const Grid& g = u.grid();
  const double dx = g.dx();
  const double inner = 0.5 * g.length() - margin * g.length();

  // Fraction of each axis cell lying in the shell.
  std::vector<double> shell(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) {
    double lo = g.position(j) - 0.5 * dx;
    double hi = g.position(j) + 0.5 * dx;
    double overlap = std::max(0.0, std::min(hi, inner) - std::max(lo, -inner));
    shell[j] = 1.0 - overlap / dx;
  }

  std::vector<double> total(g.size()), outer(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto idx = g.unravel(i);
    double interior = 1.0;
    for (int a = 0; a < g.dim(); ++a) interior *= 1.0 - shell[idx[a]];
    double m = std::norm(u[i]);
    total[i] = m;
    outer[i] = m * (1.0 - interior);
  }
  double mass = pairwise_sum(total);
  if (mass == 0.0) return 0.0;
  return pairwise_sum(outer) / mass;
}

double pairwise_sum(std::span<const double> xs) noexcept {
  constexpr std::size_t kBlock = 16;
  if (xs.size() <= kBlock) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace hartree
