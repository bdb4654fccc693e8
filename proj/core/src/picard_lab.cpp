#include "hartree/picard_lab.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hartree/dynamics.hpp"
#include "hartree/error.hpp"
#include "hartree/norms.hpp"
#include "hartree/parallel.hpp"
#include "hartree/propagator.hpp"

namespace hartree {
namespace {

double kernel_gamma(const KernelSpec& spec, int dim) {
  if (const auto* s = std::get_if<Homogeneous>(&spec)) return s->gamma;
  if (const auto* s = std::get_if<TruncatedLow>(&spec)) return s->gamma;
  if (const auto* s = std::get_if<Tail>(&spec)) return s->gamma;
  // A delta kernel behaves like gamma = d under dilation.
  return static_cast<double>(dim);
}

}  // namespace

ScaledFamily::ScaledFamily(Field base, std::vector<double> h_values)
    : base_(std::move(base)), h_values_(std::move(h_values)) {
  for (std::size_t i = 0; i < h_values_.size(); ++i) {
    const double h = h_values_[i];
    if (!(h > 0.0 && h <= 1.0)) throw DomainError("scaled family: every h must lie in (0, 1]");
    if (i > 0 && !(h < h_values_[i - 1])) throw DomainError("scaled family: h values must decrease strictly");
  }
}

Grid ScaledFamily::grid_for(double h) const {
  if (!(h > 0.0 && h <= 1.0)) throw DomainError("scaled family: h must lie in (0, 1]");
  return base_.grid().with_length(base_length() / h);
}

Field ScaledFamily::member(double h) const {
  // x_j on the L0/h box is x_j(L0)/h, so f(h x_j) reuses the base samples.
  return Field(grid_for(h), std::vector<complex>(base_.values().begin(), base_.values().end()));
}

ScaledFamily gaussian_family(const Grid& base_grid, double width, std::vector<double> h_values) {
  return ScaledFamily(gaussian(base_grid, width), std::move(h_values));
}

Field second_iterate(const Field& f, const Kernel& k, double t, std::size_t n_quad) {
  if (n_quad < 16) throw DomainError("second_iterate: n_quad must be >= 16");
  if (!(t >= 0.0)) throw DomainError("second_iterate: t must be >= 0");
  require_same_grid(f.grid(), k.grid(), "second_iterate");
  const Grid& g = f.grid();
  if (t == 0.0 || k.is_zero()) return Field(g);

  const auto xi2 = g.frequency_norm_squared();
  const SpectralField fhat = forward(f);
  const double dt = t / static_cast<double>(n_quad - 1);

  // Interaction-picture integrand e^{-i(-s)|xi|^2} F[N(e^{is Delta} f)] at each node.
  std::vector<SpectralField> pulled(n_quad, SpectralField(g));
  parallel_for(n_quad, [&](std::size_t j) {
    const double s = dt * static_cast<double>(j);
    SpectralField free = fhat;
    free_evolve_spectrum(free, xi2, s);
    SpectralField nl = forward(hartree_rhs(inverse(free), k));
    free_evolve_spectrum(nl, xi2, -s);
    pulled[j] = std::move(nl);
  });

  SpectralField acc(g);
  auto a = acc.values();
  for (std::size_t j = 0; j < n_quad; ++j) {
    const double w = (j == 0 || j + 1 == n_quad) ? 0.5 * dt : dt;
    auto p = pulled[j].values();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += w * p[i];
  }
  acc *= complex(0.0, -1.0);
  free_evolve_spectrum(acc, xi2, t);
  return inverse(acc);
}

double scaling_identity_residual(const ScaledFamily& family, const KernelSpec& spec, double t, double h,
                                 std::size_t n_quad) {
  const auto* homog = std::get_if<Homogeneous>(&spec);
  if (!homog) throw UnsupportedKernelError("scaling identity requires a homogeneous kernel");
  const auto& hs = family.h_values();
  if (std::find(hs.begin(), hs.end(), h) == hs.end())
    throw DomainError("scaling identity: h = " + std::to_string(h) + " is not in the family");
  if (!(t > 0.0)) throw DomainError("scaling identity: t must be positive");

  const int dim = family.base().grid().dim();
  const Kernel k_h = materialize(spec, family.grid_for(h));
  const double lhs = norm_wiener(second_iterate(family.member(h), k_h, t, n_quad));

  const Kernel k_0 = materialize(spec, family.base().grid());
  const double exponent = static_cast<double>(dim) - homog->gamma + 2.0;
  const double rhs = std::pow(h, -exponent) * norm_wiener(second_iterate(family.base(), k_0, t * h * h, n_quad));

  if (rhs == 0.0) return lhs == 0.0 ? 0.0 : kInfinity;
  return std::abs(lhs - rhs) / std::abs(rhs);
}

InflationReport inflation_sweep(const ScaledFamily& family, const KernelSpec& spec, double t, std::size_t n_quad) {
  const auto& hs = family.h_values();
  if (hs.size() < 3) throw DomainError("inflation_sweep: need at least 3 h values");
  if (!(t > 0.0)) throw DomainError("inflation_sweep: t must be positive");
  const Grid& base_grid = family.base().grid();
  const int dim = base_grid.dim();

  InflationReport rep;
  rep.kernel = kernel_name(spec);
  rep.t = t;
  rep.decay_exponent = static_cast<double>(dim) - kernel_gamma(spec, dim);
  rep.h = hs;
  const std::size_t count = hs.size();
  rep.d_wiener.resize(count);
  rep.f_wiener.resize(count);
  rep.f_l2.resize(count);
  rep.compensated.resize(count);

  for (std::size_t i = 0; i < count; ++i) {
    const double h = hs[i];
    const Field fh = family.member(h);
    const Kernel kh = materialize(spec, fh.grid());
    rep.d_wiener[i] = norm_wiener(second_iterate(fh, kh, t, n_quad));
    rep.f_wiener[i] = norm_wiener(fh);
    rep.f_l2[i] = norm_lp(fh, 2.0);
    rep.compensated[i] = rep.d_wiener[i] * std::pow(h, rep.decay_exponent);
  }

  const Kernel k0 = materialize(spec, base_grid);
  rep.g0_wiener = norm_wiener(hartree_rhs(family.base(), k0));

  const bool positive = std::all_of(rep.d_wiener.begin(), rep.d_wiener.end(), [](double v) { return v > 0.0; });
  if (positive) {
    std::vector<double> lx(count), ly(count);
    for (std::size_t i = 0; i < count; ++i) {
      lx[i] = std::log(hs[i]);
      ly[i] = std::log(rep.d_wiener[i]);
    }
    rep.fit = fit_line(lx, ly);
    rep.fit_valid = count >= 5;
  }

  if (const auto* trunc = std::get_if<TruncatedLow>(&spec)) {
    const double d = dim;
    rep.tail_q = 2.0 * d / (d - trunc->gamma);
    for (double h : hs) {
      const Kernel tail = materialize(Tail{trunc->gamma, h}, base_grid);
      const double norm = multiplier_lq_norm(tail, rep.tail_q).value;
      rep.tail_norm.push_back(norm);
      rep.tail_bound.push_back(t * h * h * norm);
    }
  }
  return rep;
}

TaylorFit taylor_fit(const Field& f, const Kernel& k, const std::vector<double>& s_values, std::size_t n_quad) {
  if (s_values.size() < 4) throw DomainError("taylor_fit: need at least 4 s values");
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    if (!(s_values[i] > 0.0)) throw DomainError("taylor_fit: s values must be positive");
    if (i > 0 && !(s_values[i] < s_values[i - 1])) throw DomainError("taylor_fit: s values must decrease strictly");
  }
  const double s_max = s_values.front();
  const double s_min = s_values.back();
  if (s_max / s_min < 10.0 * (1.0 - 1e-9)) throw DomainError("taylor_fit: s values must span at least one decade");

  TaylorFit out;
  const Field g0 = hartree_rhs(f, k);
  out.g0_wiener = norm_wiener(g0);
  out.s = s_values;
  for (double s : s_values) {
    Field d = second_iterate(f, k, s, n_quad);
    out.d_wiener.push_back(norm_wiener(d));
    Field rem = d + complex(0.0, s) * g0;
    out.remainder.push_back(norm_wiener(rem));
  }

  // Fit in units of s_max for conditioning.
  std::vector<double> scaled(s_values.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = s_values[i] / s_max;
  const auto lq = fit_linear_quadratic(scaled, out.d_wiener);
  out.linear_coeff = lq.linear / s_max;

  const bool positive = std::all_of(out.remainder.begin(), out.remainder.end(), [](double v) { return v > 0.0; });
  if (positive) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < s_values.size(); ++i) {
      lx.push_back(std::log(s_values[i]));
      ly.push_back(std::log(out.remainder[i]));
    }
    out.remainder_order = fit_line(lx, ly).slope;
    out.remainder_fit_valid = true;
  } else {
    out.remainder_order = std::nan("");
  }
  return out;
}

}  // namespace hartree
