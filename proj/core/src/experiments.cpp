#include "hartree/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>

#include "hartree/dynamics.hpp"
#include "hartree/error.hpp"
#include "hartree/field_io.hpp"
#include "hartree/kernel_oracle.hpp"
#include "hartree/parallel.hpp"
#include "hartree/picard_lab.hpp"
#include "hartree/propagator.hpp"
#include "hartree/random_fields.hpp"

namespace hartree {
namespace {

namespace tol = tolerances;

struct Context {
  const RunConfig& cfg;
  ExperimentReport& report;
  std::vector<std::pair<std::string, Trajectory>> dumps;
};

Grid make_grid(const RunConfig& cfg) { return Grid(cfg.grid.dim, cfg.grid.n, cfg.grid.length); }

Kernel make_kernel(const RunConfig& cfg, const Grid& grid) {
  return materialize(kernel_spec(cfg), grid, ZeroModePolicy{cfg.kernel.zero_mode});
}

double spread(const std::vector<double>& v, double reference) {
  double worst = 0.0;
  for (double x : v) worst = std::max(worst, std::abs(x / reference - 1.0));
  return worst;
}

void run_global(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Grid grid = make_grid(cfg);
  const Kernel k = make_kernel(cfg, grid);
  const Field u0 = initial_field(cfg, grid);
  Trajectory tr = splitstep_solve(u0, k, cfg.time.horizon, cfg.time.dt, cfg.time.sample_stride);
  const auto mon = conservation_monitor(tr);

  auto& r = ctx.report;
  r.upper("l2_drift", mon.l2_drift, tol::kL2Drift, "max relative deviation of ||u(t)||_2");
  const bool finite = std::all_of(mon.w_values.begin(), mon.w_values.end(), [](double w) { return std::isfinite(w); });
  r.check("wiener_finite", finite, "every ||u(t)||_W finite");
  const double w0 = mon.w_values.front();
  r.upper("wiener_growth", mon.w_max / w0, tol::kWienerGrowth, "omega(T) / ||u0||_W");
  const auto mid = mon.w_values.begin() + static_cast<std::ptrdiff_t>(mon.w_values.size() / 2);
  const double early = *std::max_element(mon.w_values.begin(), mid);
  const double late = *std::max_element(mid, mon.w_values.end());
  r.upper("wiener_trend", late / early, tol::kWienerTrend, "sup of ||u||_W on the second half / first half");
  r.info("boundary_mass_final", boundary_mass_fraction(tr.back(), 0.1), "outer 10% shell, last sample");

  Curve c{"conservation", {"t", "l2", "wiener", "omega"}, {}};
  for (std::size_t m = 0; m < tr.size(); ++m)
    c.rows.push_back({tr.time(m), mon.l2_profile[m], mon.w_values[m], mon.w_profile[m]});
  r.curves.push_back(std::move(c));
  if (cfg.io.dump_fields) ctx.dumps.emplace_back("splitstep", std::move(tr));
}

void run_crossval(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Grid grid = make_grid(cfg);
  const Kernel k = make_kernel(cfg, grid);
  const Field u0 = initial_field(cfg, grid);

  PicardConfig pc;
  pc.horizon = cfg.time.horizon;
  pc.n_time = cfg.picard.n_time;
  pc.tol = cfg.picard.tol;
  pc.max_iter = cfg.picard.max_iter;
  pc.ball_factor = cfg.picard.ball_factor;
  PicardResult picard = picard_solve(u0, k, pc);

  const double dt = pc.horizon / static_cast<double>((pc.n_time - 1) * cfg.picard.substeps);
  Trajectory split = splitstep_solve(u0, k, pc.horizon, dt, cfg.picard.substeps);
  if (split.size() != picard.trajectory.size())
    throw DomainError("crossval: split-step samples do not align with Picard nodes");

  auto& r = ctx.report;
  r.check("picard_converged", picard.report.converged);
  r.check("picard_in_ball", !picard.report.ball_violation);
  r.info("picard_iterations", picard.report.iterations);
  r.info("picard_residual", picard.report.residual);

  Curve c{"crossval", {"t", "discrepancy", "picard_l2", "picard_wiener"}, {}};
  double worst = 0.0;
  for (std::size_t m = 0; m < split.size(); ++m) {
    const double gap = norm_l2_cap_w(picard.trajectory.field(m) - split.field(m));
    worst = std::max(worst, gap);
    c.rows.push_back({split.time(m), gap, picard.report.l2_norms[m], picard.report.wiener_norms[m]});
  }
  const bool linear = k.is_zero();
  r.upper("discrepancy", worst, linear ? tol::kCrossvalLinear : tol::kCrossval,
          "sup over nodes of ||u_picard - u_split||_{L2 cap W}");
  r.info("picard_l2_drift", conservation_monitor(picard.trajectory).l2_drift);
  r.curves.push_back(std::move(c));
  if (cfg.io.dump_fields) {
    ctx.dumps.emplace_back("picard", std::move(picard.trajectory));
    ctx.dumps.emplace_back("splitstep", std::move(split));
  }
}

ScaledFamily make_family(const RunConfig& cfg) {
  const Grid grid = make_grid(cfg);
  return ScaledFamily(initial_field(cfg, grid), cfg.sweep.h);
}

void run_inflation(Context& ctx, bool homogeneous) {
  const auto& cfg = ctx.cfg;
  const ScaledFamily family = make_family(cfg);
  const KernelSpec spec = kernel_spec(cfg);
  const double t = cfg.time.t_probe;
  const InflationReport rep = inflation_sweep(family, spec, t, cfg.time.n_quad);
  const double d = cfg.grid.dim;
  auto& r = ctx.report;

  r.info("g0_wiener", rep.g0_wiener, "||(K*|f|^2) f||_W");
  r.info("fit_slope_stderr", rep.fit.slope_stderr);
  r.info("boundary_mass_base", boundary_mass_fraction(family.base(), 0.1));

  if (homogeneous) {
    r.check("fit_valid", rep.fit_valid, ">= 5 positive sweep values");
    r.upper("slope_error", std::abs(rep.fit.slope + rep.decay_exponent), tol::kSlope,
            "|fitted slope + (d - gamma)|, slope = " + std::to_string(rep.fit.slope));
    const double limit = rep.compensated.back() / (t * rep.g0_wiener);
    r.upper("compensated_limit_error", std::abs(limit - 1.0), tol::kCompensated,
            "||D(f^h)(t)||_W h^{d-gamma} / (t ||g(0)||_W) - 1 at smallest h");
    r.upper("wiener_family_spread", spread(rep.f_wiener, rep.f_wiener.front()), tol::kFamilyNorm,
            "max | ||f^h||_W / ||f||_W - 1 |");
    const double base_l2 = norm_lp(family.base(), 2.0);
    std::vector<double> scaled;
    for (std::size_t i = 0; i < rep.h.size(); ++i) scaled.push_back(rep.f_l2[i] * std::pow(rep.h[i], 0.5 * d));
    r.upper("l2_family_scaling", spread(scaled, base_l2), tol::kFamilyNorm, "max | h^{d/2} ||f^h||_2 / ||f||_2 - 1 |");
    double worst = 0.0;
    for (double h : rep.h) worst = std::max(worst, scaling_identity_residual(family, spec, t, h, cfg.time.n_quad));
    r.upper("scaling_identity_residual", worst, tol::kScalingIdentity, "max over the sweep");
  } else {
    bool monotone = true;
    for (std::size_t i = 1; i < rep.d_wiener.size(); ++i) monotone = monotone && rep.d_wiener[i] > rep.d_wiener[i - 1];
    r.check("monotone_growth", monotone, "||D(f^h)(t)||_W strictly increases as h decreases");
    const double fw = rep.f_wiener.front();
    const double reference = rep.d_wiener.front() / (fw * fw * fw);
    r.lower("growth_factor", rep.d_wiener.back() / (reference * fw * fw * fw), tol::kTruncatedGrowth,
            "||D(f^h)(t)||_W / (C_ref ||f||_W^3), C_ref from the largest h");
    r.info("fit_slope", rep.fit.slope);
    r.info("tail_q", rep.tail_q);
  }

  Curve c{"inflation", {"h", "d_wiener", "compensated", "f_wiener", "f_l2"}, {}};
  if (!homogeneous) {
    c.columns.push_back("tail_norm");
    c.columns.push_back("tail_bound");
  }
  for (std::size_t i = 0; i < rep.h.size(); ++i) {
    std::vector<double> row{rep.h[i], rep.d_wiener[i], rep.compensated[i], rep.f_wiener[i], rep.f_l2[i]};
    if (!homogeneous) {
      row.push_back(rep.tail_norm[i]);
      row.push_back(rep.tail_bound[i]);
    }
    c.rows.push_back(std::move(row));
  }
  r.curves.push_back(std::move(c));
}

void run_taylor(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Grid grid = make_grid(cfg);
  const Kernel k = make_kernel(cfg, grid);
  const Field f = initial_field(cfg, grid);
  const TaylorFit fit = taylor_fit(f, k, cfg.taylor.s, cfg.time.n_quad);
  auto& r = ctx.report;

  r.info("g0_wiener", fit.g0_wiener);
  if (k.is_zero()) {
    r.upper("linear_coeff_abs", std::abs(fit.linear_coeff), 1e-14, "zero kernel");
  } else {
    r.upper("linear_coeff_error", std::abs(fit.linear_coeff / fit.g0_wiener - 1.0), tol::kTaylorLinear,
            "fitted linear coefficient vs ||(K*|f|^2) f||_W");
    r.lower("remainder_order", fit.remainder_fit_valid ? fit.remainder_order : -kInfinity, tol::kTaylorOrder);
    const double s_min = fit.s.back();
    r.upper("small_s_ratio_error", std::abs(fit.d_wiener.back() / s_min / fit.g0_wiener - 1.0), tol::kTaylorLinear,
            "||D(f)(s)||_W / s vs ||g(0)||_W at the smallest s");
  }
  Curve c{"taylor", {"s", "d_wiener", "remainder"}, {}};
  for (std::size_t i = 0; i < fit.s.size(); ++i) c.rows.push_back({fit.s[i], fit.d_wiener[i], fit.remainder[i]});
  r.curves.push_back(std::move(c));
}

void run_strichartz(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Grid coarse = make_grid(cfg);
  const Grid fine(cfg.grid.dim, 2 * cfg.grid.n, cfg.grid.length);
  const AdmissiblePair energy{kInfinity, 2.0};
  const AdmissiblePair pair = make_admissible(cfg.strichartz.q_space, cfg.grid.dim);
  const std::size_t m_coarse = cfg.strichartz.time_samples;
  const std::size_t m_fine = 2 * m_coarse;
  const double horizon = cfg.time.horizon;

  std::mt19937_64 rng(cfg.seed);
  Curve c{"strichartz", {"sample", "ratio_energy", "ratio_energy_refined", "ratio_pair", "ratio_pair_refined"}, {}};
  double unitarity = 0.0, refine_energy = 0.0, refine_pair = 0.0, largest = 0.0;
  for (std::size_t s = 0; s < cfg.strichartz.samples; ++s) {
    const auto packets = random_wave_packets(cfg.grid.dim, rng, cfg.strichartz.packets, cfg.grid.length / 10.0);
    const Field u_coarse = sample_packets(coarse, packets);
    const Field u_fine = sample_packets(fine, packets);
    const double e1 = strichartz_ratio(u_coarse, energy, horizon, m_coarse);
    const double e2 = strichartz_ratio(u_fine, energy, horizon, m_fine);
    const double p1 = strichartz_ratio(u_coarse, pair, horizon, m_coarse);
    const double p2 = strichartz_ratio(u_fine, pair, horizon, m_fine);
    unitarity = std::max({unitarity, std::abs(e1 - 1.0), std::abs(e2 - 1.0)});
    refine_energy = std::max(refine_energy, std::abs(e2 - e1) / e1);
    refine_pair = std::max(refine_pair, std::abs(p2 - p1) / p1);
    largest = std::max({largest, e1, e2, p1, p2});
    c.rows.push_back({static_cast<double>(s), e1, e2, p1, p2});
  }
  auto& r = ctx.report;
  r.info("pair_p", pair.p);
  r.info("pair_q", pair.q);
  r.upper("energy_pair_unitarity", unitarity, tol::kUnitarity, "max |ratio(inf, 2) - 1|");
  r.upper("energy_pair_refinement", refine_energy, tol::kStrichartzRefinement, "relative change under (M, N) doubling");
  r.upper("pair_refinement", refine_pair, tol::kStrichartzRefinement, "relative change under (M, N) doubling");
  r.upper("max_ratio", largest, tol::kStrichartzBound, "fixed report constant");
  r.curves.push_back(std::move(c));
}

void run_kernel_oracle(Context& ctx) {
  const auto& cfg = ctx.cfg;
  auto& r = ctx.report;
  Curve c{"kernel_oracle", {"gamma", "sigma", "mean_ratio", "min_ratio", "max_ratio", "formula"}, {}};
  double worst = 0.0, worst_sigma = 0.0;
  for (double gamma : cfg.oracle.gammas) {
    const double formula = homogeneous_constant(gamma, 1);
    double lo = kInfinity, hi = -kInfinity;
    for (double sigma : cfg.oracle.sigmas) {
      const auto p = probe_homogeneous_constant(gamma, sigma, cfg.grid.n, cfg.grid.length, cfg.oracle.xi_lo,
                                                cfg.oracle.xi_hi);
      worst = std::max(worst, std::abs(p.mean_ratio / formula - 1.0));
      lo = std::min(lo, p.mean_ratio);
      hi = std::max(hi, p.mean_ratio);
      c.rows.push_back({gamma, sigma, p.mean_ratio, p.min_ratio, p.max_ratio, formula});
    }
    worst_sigma = std::max(worst_sigma, (hi - lo) / formula);
    r.info("formula_gamma_" + std::to_string(gamma), formula);
  }
  r.upper("constant_error", worst, tol::kKernelConstant, "max | probe / C(gamma, 1) - 1 |");
  r.upper("sigma_stability", worst_sigma, tol::kKernelSigmaStability, "max spread of probe across sigma / C");
  r.curves.push_back(std::move(c));
}

}  // namespace

Field initial_field(const RunConfig& cfg, const Grid& grid) {
  if (cfg.initial.profile == "file") return read_field(cfg.initial.path, grid);
  return gaussian(grid, cfg.initial.width, cfg.initial.amplitude);
}

ExperimentReport run_experiment(const RunConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.experiment = to_string(cfg.experiment);
  report.config_json = config_to_json(cfg);
  report.grid = "d=" + std::to_string(cfg.grid.dim) + " N=" + std::to_string(cfg.grid.n) +
                " L=" + std::to_string(cfg.grid.length);
  report.threads = thread_count();

  Context ctx{cfg, report, {}};
  try {
    switch (cfg.experiment) {
      case Experiment::kGlobal: run_global(ctx); break;
      case Experiment::kCrossval: run_crossval(ctx); break;
      case Experiment::kInflationHomog: run_inflation(ctx, true); break;
      case Experiment::kInflationTruncated: run_inflation(ctx, false); break;
      case Experiment::kTaylor: run_taylor(ctx); break;
      case Experiment::kStrichartz: run_strichartz(ctx); break;
      case Experiment::kKernelOracle: run_kernel_oracle(ctx); break;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    report.check("numerical_failure", false, e.what());
  }

  if (cfg.io.dump_fields) {
    const std::filesystem::path dir = std::filesystem::path(cfg.io.output_dir) / "fields";
    for (const auto& [prefix, tr] : ctx.dumps) write_trajectory(tr, dir, prefix);
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ExperimentReport run(const RunConfig& cfg) {
  ExperimentReport report = run_experiment(cfg);
  write_report(report, cfg.io.output_dir);
  return report;
}

}  // namespace hartree
