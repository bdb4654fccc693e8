#pragma once

#include <vector>

#include "hartree/grid.hpp"
#include "hartree/kernels.hpp"
#include "hartree/norms.hpp"

namespace hartree {

/// 2/3-rule spectral mask: 1 where |k_a| < N/3 on every axis, 0 elsewhere.
std::vector<double> dealias_mask(const Grid& grid);

/// Potential K * |u|^2 computed spectrally from the dealiased density. The
/// result is real for real even multipliers; the imaginary part is returned
/// as computed so callers can check it.
Field hartree_potential(const Field& u, const Kernel& k);

/// (K * |u|^2) u with both products dealiased by the 2/3 rule.
Field hartree_rhs(const Field& u, const Kernel& k);

/// Picard iteration for the Duhamel map
///   Phi(u)(t) = e^{it Delta} u0 - i int_0^t e^{i(t-s) Delta} (K*|u|^2 u)(s) ds
/// on n_time equispaced nodes of [0, horizon].
struct PicardConfig {
  double horizon = 0.05;
  std::size_t n_time = 33;
  double tol = 1e-10;
  int max_iter = 50;
  double ball_factor = 2.0;
};

void validate(const PicardConfig& cfg);

struct SolveReport {
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;                 // last sup_t ||u^{n+1} - u^n||_{L2 cap W}
  std::vector<double> residual_history;  // one entry per iteration
  std::vector<double> l2_norms;          // per time node, final iterate
  std::vector<double> wiener_norms;      // per time node, final iterate
  bool ball_violation = false;
  double ball_radius = 0.0;
  double horizon = 0.0;  // interval actually solved
  int halvings = 0;      // adaptive retries taken
};

struct PicardResult {
  Trajectory trajectory;
  SolveReport report;
};

/// One fixed-point solve on [0, cfg.horizon]. Stops early and reports failure
/// when an iterate leaves the ball of radius ball_factor * ||u0||_{L2 cap W}
/// or turns non-finite.
PicardResult picard_solve(const Field& u0, const Kernel& k, const PicardConfig& cfg);

/// picard_solve, halving the horizon after each failed attempt (up to
/// max_halvings times).
PicardResult picard_solve_adaptive(const Field& u0, const Kernel& k, PicardConfig cfg, int max_halvings = 10);

/// Strang splitting: half potential phase, exact free step, half potential
/// phase. The step is T / ceil(T / dt). Samples are taken at t = 0, every
/// `sample_stride` steps, and at T.
Trajectory splitstep_solve(const Field& u0, const Kernel& k, double horizon, double dt,
                           std::size_t sample_stride = 1);

struct ConservationReport {
  double l2_drift = 0.0;            // max_m | ||u_m||_2 - ||u_0||_2 | / ||u_0||_2
  double w_max = 0.0;               // max_m ||u_m||_W
  std::vector<double> l2_profile;   // ||u_m||_2
  std::vector<double> w_values;     // ||u_m||_W
  std::vector<double> w_profile;    // running sup of w_values
};

ConservationReport conservation_monitor(const Trajectory& tr);

/// ||N(f) - N(g)||_{L2 cap W} / ((||f||^2 + ||g||^2) ||f - g||) with all norms
/// in L2 cap W and N the Hartree nonlinearity. Zero when f == g.
double trilinear_ratio(const Field& f, const Field& g, const Kernel& k);

}  // namespace hartree
