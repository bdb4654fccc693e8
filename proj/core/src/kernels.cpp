#include "hartree/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "hartree/error.hpp"
#include "hartree/field_io.hpp"

namespace hartree {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_gamma(double gamma, int dim) {
  if (!(gamma > 0.0 && gamma < static_cast<double>(dim)))
    throw DomainError("kernel gamma must satisfy 0 < gamma < d (got " + std::to_string(gamma) + ")");
}

// Radial power profile c * r^{gamma-d} restricted to lo < r <= hi.
struct RadialProfile {
  double coeff = 0.0;
  double exponent = 0.0;  // gamma - d
  double lo = 0.0;        // support edge below (0 means none)
  double hi = kInf;       // support edge above
  bool singular_at_zero = false;

  double at(double r) const { return coeff * std::pow(r, exponent); }
};

std::optional<RadialProfile> radial_profile(const KernelSpec& spec, int dim) {
  const double d = dim;
  return std::visit(
      overloaded{
          [&](const Homogeneous& s) -> std::optional<RadialProfile> {
            return RadialProfile{s.lambda * homogeneous_constant(s.gamma, dim), s.gamma - d, 0.0, kInf, true};
          },
          [&](const TruncatedLow& s) -> std::optional<RadialProfile> {
            return RadialProfile{1.0, s.gamma - d, 0.0, s.radius, true};
          },
          [&](const Tail& s) -> std::optional<RadialProfile> {
            return RadialProfile{1.0, s.gamma - d, 1.0 / s.h, kInf, false};
          },
          [](const FromFile&) -> std::optional<RadialProfile> { return std::nullopt; },
          [](const Delta&) -> std::optional<RadialProfile> { return std::nullopt; },
      },
      spec);
}

// omega * int_a^b r^{d-1} (|c| r^e)^q dr
double radial_power_integral(double abs_coeff, double exponent, double q, int dim, double a, double b) {
  if (b <= a) return 0.0;
  const double p = dim - 1 + exponent * q;
  const double scale = unit_sphere_area(dim) * std::pow(abs_coeff, q);
  if (std::abs(p + 1.0) < 1e-14) return scale * (std::log(b) - std::log(a));
  const double upper = std::isinf(b) ? 0.0 : std::pow(b, p + 1.0);
  return scale * (upper - std::pow(a, p + 1.0)) / (p + 1.0);
}

double cell_fraction(double signed_distance, double dxi) {
  return std::clamp(signed_distance / dxi + 0.5, 0.0, 1.0);
}

}  // namespace

std::string kernel_name(const KernelSpec& spec) {
  return std::visit(overloaded{
                        [](const Homogeneous&) { return std::string("homogeneous"); },
                        [](const TruncatedLow&) { return std::string("truncated"); },
                        [](const Tail&) { return std::string("tail"); },
                        [](const FromFile&) { return std::string("file"); },
                        [](const Delta&) { return std::string("delta"); },
                    },
                    spec);
}

void validate(const KernelSpec& spec, int dim) {
  std::visit(overloaded{
                 [&](const Homogeneous& s) { check_gamma(s.gamma, dim); },
                 [&](const TruncatedLow& s) {
                   check_gamma(s.gamma, dim);
                   if (!(s.radius > 0.0)) throw DomainError("truncation radius must be positive");
                 },
                 [&](const Tail& s) {
                   check_gamma(s.gamma, dim);
                   if (!(s.h > 0.0 && s.h <= 1.0)) throw DomainError("tail kernel requires 0 < h <= 1");
                 },
                 [](const FromFile& s) {
                   if (s.path.empty()) throw DomainError("file kernel requires a path");
                 },
                 [](const Delta&) {},
             },
             spec);
}

Kernel::Kernel(Grid grid, std::vector<double> multiplier, KernelSpec spec, ZeroModePolicy policy)
    : grid_(std::move(grid)), multiplier_(std::move(multiplier)), spec_(std::move(spec)), policy_(policy) {
  if (multiplier_.size() != grid_.size()) throw GridMismatchError("kernel multiplier size does not match grid");
  for (double m : multiplier_)
    if (!std::isfinite(m)) throw DomainError("kernel multiplier must be finite everywhere");
}

bool Kernel::is_zero() const noexcept {
  return std::all_of(multiplier_.begin(), multiplier_.end(), [](double m) { return m == 0.0; });
}

double homogeneous_constant(double gamma, int dim) {
  check_gamma(gamma, dim);
  const double d = dim;
  return std::pow(2.0, 0.5 * d - gamma) * std::tgamma(0.5 * (d - gamma)) / std::tgamma(0.5 * gamma);
}

Kernel materialize(const KernelSpec& spec, const Grid& grid, ZeroModePolicy policy) {
  validate(spec, grid.dim());
  std::vector<double> m(grid.size(), 0.0);

  if (const auto* file = std::get_if<FromFile>(&spec)) {
    Field raw = read_field(file->path);
    const Grid& fg = raw.grid();
    if (fg.dim() != grid.dim() || fg.n() != grid.n() || fg.length() != grid.length())
      throw GridMismatchError("kernel file " + file->path.string() + " does not match the simulation grid");
    const std::size_t n = grid.n();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (raw[i].imag() != 0.0)
        throw FormatError("kernel file " + file->path.string() + " has a non-zero imaginary part");
    }
    // Ascending-wavenumber file order -> FFT storage order (per-axis shift by N/2).
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
      auto idx = grid.unravel(flat);
      std::size_t src = 0;
      for (int a = 0; a < grid.dim(); ++a) src = src * n + (idx[a] + n / 2) % n;
      m[flat] = raw[src].real();
    }
    return Kernel(grid, std::move(m), spec, policy);
  }

  if (std::holds_alternative<Delta>(spec)) {
    std::fill(m.begin(), m.end(), std::pow(2.0 * kPi, -0.5 * grid.dim()));
    return Kernel(grid, std::move(m), spec, policy);
  }

  const RadialProfile prof = *radial_profile(spec, grid.dim());
  const auto xi2 = grid.frequency_norm_squared();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = std::sqrt(xi2[i]);
    if (r == 0.0) continue;
    if (r > prof.lo && r <= prof.hi) m[i] = prof.at(r);
  }
  if (prof.singular_at_zero && prof.coeff != 0.0) m[0] = policy.value;
  return Kernel(grid, std::move(m), spec, policy);
}

std::pair<Kernel, Kernel> split_low_high(const Kernel& k, double radius) {
  const Grid& g = k.grid();
  const auto xi2 = g.frequency_norm_squared();
  const double r2 = radius * radius;
  std::vector<double> low(g.size(), 0.0), high(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    (xi2[i] <= r2 ? low : high)[i] = k.multiplier()[i];
  }
  // Parts are tagged as file-like so norm evaluation falls back to plain sums.
  Kernel lo(g, std::move(low), FromFile{"<split:low>"}, k.zero_mode_policy());
  Kernel hi(g, std::move(high), FromFile{"<split:high>"}, k.zero_mode_policy());
  return {std::move(lo), std::move(hi)};
}

double unit_sphere_area(int dim) {
  switch (dim) {
    case 1: return 2.0;
    case 2: return 2.0 * kPi;
    case 3: return 4.0 * kPi;
    default: throw DomainError("unit_sphere_area: dimension must be 1, 2 or 3");
  }
}

LqNorm tail_lq_norm_closed_form(double gamma, double h, double q, int dim) {
  check_gamma(gamma, dim);
  if (!(h > 0.0 && h <= 1.0)) throw DomainError("tail kernel requires 0 < h <= 1");
  if (!(q >= 1.0)) throw DomainError("q must be >= 1");
  const double d = dim;
  if (std::isinf(q)) return {std::pow(h, d - gamma), false};
  const double denom = (d - gamma) * q - d;
  if (denom <= 0.0) return {kInf, true};
  return {std::pow(unit_sphere_area(dim) / denom, 1.0 / q) * std::pow(h, d - gamma - d / q), false};
}

LqNorm multiplier_lq_norm(const Kernel& k, double q) {
  if (!(q >= 1.0)) throw DomainError("multiplier_lq_norm: q must be >= 1");
  const Grid& g = k.grid();
  const auto mult = k.multiplier();
  if (k.is_zero()) return {0.0, false};

  const bool analytic = !std::holds_alternative<FromFile>(k.spec());
  const double d = g.dim();

  if (std::isinf(q)) {
    double mx = 0.0;
    for (double m : mult) mx = std::max(mx, std::abs(m));
    if (analytic) {
      auto prof = radial_profile(k.spec(), g.dim());
      if (prof && prof->singular_at_zero) return {kInf, true};
    }
    return {mx, false};
  }

  std::vector<double> terms(g.size());
  if (!analytic) {
    for (std::size_t i = 0; i < g.size(); ++i) terms[i] = std::pow(std::abs(mult[i]), q);
    return {std::pow(g.spectral_cell_volume() * pairwise_sum(terms), 1.0 / q), false};
  }

  if (std::holds_alternative<Delta>(k.spec())) return {kInf, true};

  const RadialProfile prof = *radial_profile(k.spec(), g.dim());
  const double power = -prof.exponent * q;  // (d - gamma) q
  const bool diverges_at_zero = prof.singular_at_zero && prof.lo == 0.0 && power >= d;
  const bool diverges_at_inf = std::isinf(prof.hi) && power <= d;
  if (diverges_at_zero || diverges_at_inf) return {kInf, true};

  const double dxi = g.dxi();
  const double ball = (static_cast<double>(g.n()) / 2.0 - 0.5) * dxi;
  const auto xi2 = g.frequency_norm_squared();
  const double abs_coeff = std::abs(prof.coeff);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = std::sqrt(xi2[i]);
    if (r == 0.0) {
      if (prof.singular_at_zero && prof.lo == 0.0) {
        // integrable singularity: integrate over the ball with the zero cell's volume
        const double cell = g.spectral_cell_volume();
        const double rho = std::pow(cell * d / unit_sphere_area(g.dim()), 1.0 / d);
        terms[i] = std::pow(abs_coeff, q) * unit_sphere_area(g.dim()) * std::pow(rho, d - power) / (d - power) / cell;
      } else {
        terms[i] = std::pow(std::abs(mult[i]), q);
      }
      continue;
    }
    double w = cell_fraction(ball - r, dxi);
    if (prof.lo > 0.0) w *= cell_fraction(r - prof.lo, dxi);
    if (std::isfinite(prof.hi)) w *= cell_fraction(prof.hi - r, dxi);
    terms[i] = w == 0.0 ? 0.0 : w * std::pow(abs_coeff * std::pow(r, prof.exponent), q);
  }
  double total = g.spectral_cell_volume() * pairwise_sum(terms);
  total += radial_power_integral(abs_coeff, prof.exponent, q, g.dim(), std::max(ball, prof.lo), prof.hi);
  return {std::pow(total, 1.0 / q), false};
}

}  // namespace hartree
