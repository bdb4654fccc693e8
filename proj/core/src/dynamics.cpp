#include "hartree/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hartree/error.hpp"
#include "hartree/parallel.hpp"
#include "hartree/propagator.hpp"

namespace hartree {
namespace {

void apply_mask(SpectralField& s, std::span<const double> mask) {
  auto v = s.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= mask[i];
}

Field band_limit(const Field& u, std::span<const double> mask) {
  SpectralField s = forward(u);
  apply_mask(s, mask);
  return inverse(s);
}

Field potential_of_filtered(const Field& filtered, const Kernel& k, std::span<const double> mask) {
  const Grid& g = filtered.grid();
  Field density(g);
  for (std::size_t i = 0; i < g.size(); ++i) density[i] = std::norm(filtered[i]);
  SpectralField s = forward(density);
  const double conv = std::pow(2.0 * kPi, 0.5 * g.dim());
  const auto m = k.multiplier();
  auto v = s.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= conv * m[i] * mask[i];
  return inverse(s);
}

double max_abs_imag(const Field& u, double* max_abs_real) {
  double im = 0.0, re = 0.0;
  for (complex z : u.values()) {
    im = std::max(im, std::abs(z.imag()));
    re = std::max(re, std::abs(z.real()));
  }
  if (max_abs_real) *max_abs_real = re;
  return im;
}

}  // namespace

std::vector<double> dealias_mask(const Grid& grid) {
  std::vector<double> axis(grid.n());
  const double cutoff = static_cast<double>(grid.n()) / 3.0;
  for (std::size_t j = 0; j < grid.n(); ++j)
    axis[j] = std::abs(static_cast<double>(grid.wavenumber(j))) < cutoff ? 1.0 : 0.0;
  std::vector<double> mask(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto idx = grid.unravel(i);
    double m = 1.0;
    for (int a = 0; a < grid.dim(); ++a) m *= axis[idx[a]];
    mask[i] = m;
  }
  return mask;
}

Field hartree_potential(const Field& u, const Kernel& k) {
  require_same_grid(u.grid(), k.grid(), "hartree_potential");
  const auto mask = dealias_mask(u.grid());
  return potential_of_filtered(band_limit(u, mask), k, mask);
}

Field hartree_rhs(const Field& u, const Kernel& k) {
  require_same_grid(u.grid(), k.grid(), "hartree_rhs");
  const Grid& g = u.grid();
  if (k.is_zero()) return Field(g);
  const auto mask = dealias_mask(g);
  const Field filtered = band_limit(u, mask);
  Field product = potential_of_filtered(filtered, k, mask);
  for (std::size_t i = 0; i < g.size(); ++i) product[i] *= filtered[i];
  return band_limit(product, mask);
}

void validate(const PicardConfig& cfg) {
  if (!(cfg.horizon > 0.0) || !std::isfinite(cfg.horizon)) throw DomainError("picard: horizon must be positive");
  if (cfg.n_time < 8) throw DomainError("picard: n_time must be >= 8");
  if (!(cfg.tol > 0.0)) throw DomainError("picard: tol must be positive");
  if (cfg.max_iter < 1) throw DomainError("picard: max_iter must be >= 1");
  if (!(cfg.ball_factor > 0.0)) throw DomainError("picard: ball_factor must be positive");
}

PicardResult picard_solve(const Field& u0, const Kernel& k, const PicardConfig& cfg) {
  validate(cfg);
  require_same_grid(u0.grid(), k.grid(), "picard_solve");
  if (!u0.all_finite()) throw InvalidFieldError("picard_solve: initial datum is not finite");

  const Grid& g = u0.grid();
  const std::size_t nodes = cfg.n_time;
  const double dt = cfg.horizon / static_cast<double>(nodes - 1);
  const auto xi2 = g.frequency_norm_squared();
  std::vector<double> times(nodes);
  for (std::size_t m = 0; m < nodes; ++m) times[m] = cfg.horizon * static_cast<double>(m) / static_cast<double>(nodes - 1);

  const SpectralField u0hat = forward(u0);
  auto duhamel_to_physical = [&](const SpectralField& base, std::size_t m) {
    if (m == 0) return u0;
    SpectralField s = base;
    free_evolve_spectrum(s, xi2, times[m]);
    return inverse(s);
  };

  std::vector<Field> current;
  current.reserve(nodes);
  for (std::size_t m = 0; m < nodes; ++m) current.push_back(duhamel_to_physical(u0hat, m));

  SolveReport report;
  report.horizon = cfg.horizon;
  report.ball_radius = cfg.ball_factor * norm_l2_cap_w(u0);

  std::vector<SpectralField> pulled(nodes, SpectralField(g));
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    // Nonlinearity at every node, pulled back to the interaction picture.
    parallel_for(nodes, [&](std::size_t m) {
      SpectralField s = forward(hartree_rhs(current[m], k));
      free_evolve_spectrum(s, xi2, -times[m]);
      pulled[m] = std::move(s);
    });

    std::vector<Field> next(nodes, Field(g));
    std::vector<SpectralField> bases(nodes, u0hat);
    SpectralField running(g);
    const complex minus_i(0.0, -1.0);
    for (std::size_t m = 1; m < nodes; ++m) {
      auto acc = running.values();
      auto a = pulled[m - 1].values();
      auto b = pulled[m].values();
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += 0.5 * dt * (a[i] + b[i]);
      auto base = bases[m].values();
      for (std::size_t i = 0; i < base.size(); ++i) base[i] += minus_i * acc[i];
    }
    parallel_for(nodes, [&](std::size_t m) { next[m] = duhamel_to_physical(bases[m], m); });

    double residual = 0.0;
    bool finite = true;
    for (std::size_t m = 0; m < nodes; ++m) {
      if (!next[m].all_finite()) {
        finite = false;
        break;
      }
      residual = std::max(residual, norm_l2_cap_w(next[m] - current[m]));
      if (norm_l2_cap_w(next[m]) > report.ball_radius) report.ball_violation = true;
    }
    report.iterations = iter;
    current = std::move(next);
    if (!finite) {
      report.residual = kInfinity;
      report.residual_history.push_back(kInfinity);
      report.ball_violation = true;
      break;
    }
    report.residual = residual;
    report.residual_history.push_back(residual);
    if (report.ball_violation) break;
    if (residual <= cfg.tol) {
      report.converged = true;
      break;
    }
  }

  PicardResult result;
  for (std::size_t m = 0; m < nodes; ++m) {
    if (current[m].all_finite()) {
      report.l2_norms.push_back(norm_lp(current[m], 2.0));
      report.wiener_norms.push_back(norm_wiener(current[m]));
    } else {
      report.l2_norms.push_back(kInfinity);
      report.wiener_norms.push_back(kInfinity);
    }
    result.trajectory.push_back(times[m], std::move(current[m]));
  }
  result.report = std::move(report);
  return result;
}

PicardResult picard_solve_adaptive(const Field& u0, const Kernel& k, PicardConfig cfg, int max_halvings) {
  PicardResult result = picard_solve(u0, k, cfg);
  int halvings = 0;
  while (!result.report.converged && halvings < max_halvings) {
    cfg.horizon *= 0.5;
    ++halvings;
    result = picard_solve(u0, k, cfg);
  }
  result.report.halvings = halvings;
  return result;
}

Trajectory splitstep_solve(const Field& u0, const Kernel& k, double horizon, double dt, std::size_t sample_stride) {
  require_same_grid(u0.grid(), k.grid(), "splitstep_solve");
  if (!(dt > 0.0)) throw DomainError("splitstep: dt must be positive");
  if (!(horizon >= dt)) throw DomainError("splitstep: horizon must be >= dt");
  if (sample_stride == 0) throw DomainError("splitstep: sample_stride must be >= 1");
  if (!u0.all_finite()) throw InvalidFieldError("splitstep: initial datum is not finite");

  const Grid& g = u0.grid();
  const auto steps = static_cast<std::size_t>(std::ceil(horizon / dt - 1e-9));
  const double h = horizon / static_cast<double>(steps);
  const auto xi2 = g.frequency_norm_squared();
  const auto mask = dealias_mask(g);
  const bool linear = k.is_zero();

  auto potential = [&](const Field& u) {
    Field v = potential_of_filtered(band_limit(u, mask), k, mask);
    double vmax = 0.0;
    const double im = max_abs_imag(v, &vmax);
    if (im > 1e-10 * std::max(1.0, vmax))
      throw DomainError("splitstep: potential is not real (imaginary part " + std::to_string(im) +
                        "); the kernel multiplier must be real and even");
    return v;
  };
  auto kick = [&](Field& u, const Field& v) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double phase = -0.5 * h * v[i].real();
      u[i] *= complex(std::cos(phase), std::sin(phase));
    }
  };

  Trajectory tr;
  tr.push_back(0.0, u0);
  Field u = u0;
  Field v = linear ? Field(g) : potential(u);
  for (std::size_t n = 1; n <= steps; ++n) {
    if (!linear) kick(u, v);
    SpectralField s = forward(u);
    free_evolve_spectrum(s, xi2, h);
    u = inverse(s);
    if (!linear) {
      v = potential(u);
      kick(u, v);
    }
    if (!u.all_finite()) throw InvalidFieldError("splitstep: solution became non-finite");
    if (n % sample_stride == 0 || n == steps) tr.push_back(h * static_cast<double>(n), u);
  }
  return tr;
}

ConservationReport conservation_monitor(const Trajectory& tr) {
  if (tr.empty()) throw DomainError("conservation_monitor: empty trajectory");
  ConservationReport rep;
  rep.l2_profile.resize(tr.size());
  rep.w_values.resize(tr.size());
  parallel_for(tr.size(), [&](std::size_t m) {
    rep.l2_profile[m] = norm_lp(tr.field(m), 2.0);
    rep.w_values[m] = norm_wiener(tr.field(m));
  });
  const double mass0 = rep.l2_profile.front();
  double sup = 0.0;
  for (std::size_t m = 0; m < tr.size(); ++m) {
    if (mass0 > 0.0) rep.l2_drift = std::max(rep.l2_drift, std::abs(rep.l2_profile[m] - mass0) / mass0);
    sup = std::max(sup, rep.w_values[m]);
    rep.w_profile.push_back(sup);
  }
  rep.w_max = sup;
  return rep;
}

double trilinear_ratio(const Field& f, const Field& g, const Kernel& k) {
  const double diff = norm_l2_cap_w(f - g);
  if (diff == 0.0) return 0.0;
  const double nf = norm_l2_cap_w(f), ng = norm_l2_cap_w(g);
  return norm_l2_cap_w(hartree_rhs(f, k) - hartree_rhs(g, k)) / ((nf * nf + ng * ng) * diff);
}

}  // namespace hartree
