// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when any
// criterion fails.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hartree/dynamics.hpp"
#include "hartree/fit.hpp"
#include "hartree/experiments.hpp"
#include "hartree/kernel_oracle.hpp"
#include "hartree/kernels.hpp"
#include "hartree/picard_lab.hpp"
#include "hartree/propagator.hpp"
#include "hartree/random_fields.hpp"

using namespace hartree;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
};

void Outcome::require(bool ok, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  if (!detail.empty()) detail += "; ";
  detail += buf;
  if (!ok) {
    detail += " [x]";
    pass = false;
  }
}

RunConfig config(const std::string& json) {
  RunConfig cfg = parse_config(json);
  cfg.io.output_dir = "acceptance-out";
  return cfg;
}

const Metric& metric(const ExperimentReport& r, const char* name) {
  static const Metric missing{"missing", NAN, ">=", 0.0, false, "metric not produced"};
  const Metric* m = r.find(name);
  return m ? *m : missing;
}

// 1. mass conservation and bounded Wiener profile under split-step
Outcome l2_conservation() {
  Outcome o;
  for (double lambda : {1.0, -1.0}) {
    RunConfig cfg = config(R"({"experiment": "global", "grid": {"dim": 1, "N": 1024, "L": 40},
                               "kernel": {"kind": "homogeneous", "gamma": 0.4},
                               "time": {"T": 5, "dt": 1e-3, "sample_stride": 10}})");
    cfg.kernel.lambda = lambda;
    const ExperimentReport r = run_experiment(cfg);
    o.require(metric(r, "l2_drift").pass, "lambda=%+g drift=%.2e", lambda, metric(r, "l2_drift").value);
    o.require(metric(r, "wiener_finite").pass && metric(r, "wiener_growth").pass && metric(r, "wiener_trend").pass,
              "omega(T)/omega(0)=%.3f trend=%.3f", metric(r, "wiener_growth").value, metric(r, "wiener_trend").value);
  }
  return o;
}

// 2. numerically transformed mollified kernel vs the Gamma-ratio constant
Outcome kernel_constant() {
  Outcome o;
  constexpr double kRel = 0.01, kSigma = 0.005;
  for (double gamma : {0.3, 0.4}) {
    const double c = homogeneous_constant(gamma, 1);
    const auto a = probe_homogeneous_constant(gamma, 20.0, 8192, 320.0, 2.0, 4.0);
    const auto b = probe_homogeneous_constant(gamma, 40.0, 8192, 320.0, 2.0, 4.0);
    const double err = std::max(std::abs(a.mean_ratio / c - 1.0), std::abs(b.mean_ratio / c - 1.0));
    const double stab = std::abs(a.mean_ratio - b.mean_ratio) / c;
    o.require(err <= kRel && stab <= kSigma, "gamma=%.1f rel=%.1e sigma-spread=%.1e", gamma, err, stab);
  }
  return o;
}

// 3. scaling identity residual, and its behaviour under N-doubling
Outcome scaling_identity() {
  Outcome o;
  constexpr double kTol = 1e-2, kRoundoff = 1e-12;
  const std::vector<double> hs{1.0, 0.5, 0.25};
  const Homogeneous spec{1.0, 0.4};
  std::vector<double> coarse;
  for (std::size_t n : {2048u, 4096u}) {
    const ScaledFamily fam = gaussian_family(Grid(1, n, 40.0), 1.0, hs);
    for (double h : {0.5, 0.25}) {
      const double r = scaling_identity_residual(fam, spec, 0.1, h, 64);
      if (n == 2048) {
        coarse.push_back(r);
        o.require(r <= kTol, "N=2048 h=%.2f res=%.1e", h, r);
      } else {
        const double before = coarse[h == 0.5 ? 0 : 1];
        o.require(r < before || r <= kRoundoff, "N=4096 h=%.2f res=%.1e", h, r);
      }
    }
  }
  return o;
}

// 4. inflation exponent and compensated limit
Outcome inflation_exponent() {
  Outcome o;
  const ExperimentReport r = run_experiment(config(R"({"experiment": "inflation-homog",
      "grid": {"dim": 1, "N": 2048, "L": 40}, "kernel": {"kind": "homogeneous", "lambda": 1, "gamma": 0.4},
      "time": {"t_probe": 0.05, "n_quad": 64}, "sweep": {"h": [1, 0.7, 0.5, 0.35, 0.25, 0.18, 0.125]}})"));
  o.require(metric(r, "fit_valid").pass && metric(r, "slope_error").pass, "|slope+0.6|=%.1e",
            metric(r, "slope_error").value);
  o.require(metric(r, "compensated_limit_error").pass, "compensated rel=%.1e",
            metric(r, "compensated_limit_error").value);
  return o;
}

// 5. truncated kernel: monotone growth past 10x the h=1 reference
Outcome truncated_inflation() {
  Outcome o;
  const ExperimentReport r = run_experiment(config(R"({"experiment": "inflation-truncated",
      "grid": {"dim": 1, "N": 2048, "L": 40}, "kernel": {"kind": "truncated", "gamma": 0.4, "radius": 1},
      "time": {"t_probe": 0.05, "n_quad": 64}, "sweep": {"h": [1, 0.7, 0.5, 0.35, 0.25, 0.18, 0.125]}})"));
  o.require(metric(r, "monotone_growth").pass, "monotone");
  o.require(metric(r, "growth_factor").pass, "growth=%.2f (need > 10)", metric(r, "growth_factor").value);
  return o;
}

// 6. Tail-kernel L^q norm vs the radial integral, and its h-slope
Outcome tail_norm_law() {
  Outcome o;
  constexpr double kRel = 1e-3, kSlope = 0.02;
  const double gamma = 0.4;
  const Grid g(1, 4096, 200.0);
  for (double q : {10.0 / 3.0, 4.0}) {
    // int_{|xi| > 1/h} |xi|^{-(1-gamma) q} dxi in one dimension
    const double p = (1.0 - gamma) * q;
    std::vector<double> lh, lv;
    double worst = 0.0;
    for (double h : {1.0, 0.5, 0.25, 0.125}) {
      const double exact = std::pow(2.0 / (p - 1.0) * std::pow(h, p - 1.0), 1.0 / q);
      const LqNorm num = multiplier_lq_norm(materialize(Tail{gamma, h}, g), q);
      worst = std::max(worst, std::abs(num.value / exact - 1.0));
      lh.push_back(std::log(h));
      lv.push_back(std::log(num.value));
    }
    const double slope = fit_line(lh, lv).slope;
    const double expected = 1.0 - gamma - 1.0 / q;
    o.require(worst <= kRel && std::abs(slope - expected) <= kSlope, "q=%.3g rel=%.1e slope=%.4f (%.4f)", q, worst,
              slope, expected);
  }
  return o;
}

// 7. small-time Taylor law of the second iterate
Outcome taylor_law() {
  Outcome o;
  constexpr double kRel = 0.01, kOrder = 1.9;
  const Grid g(1, 1024, 40.0);
  const Field f = gaussian(g);
  const Kernel k = materialize(Homogeneous{1.0, 0.4}, g);
  const double g0 = norm_wiener(hartree_rhs(f, k));
  const TaylorFit fit = taylor_fit(f, k, {1e-2, 7e-3, 5e-3, 3e-3, 2e-3, 1e-3}, 64);
  o.require(std::abs(fit.linear_coeff / g0 - 1.0) <= kRel, "linear/||g0||_W-1=%.1e", fit.linear_coeff / g0 - 1.0);
  o.require(fit.remainder_fit_valid && fit.remainder_order >= kOrder, "remainder order=%.3f", fit.remainder_order);
  return o;
}

// 8. Picard vs split-step on [0, 0.05]
Outcome solver_agreement() {
  Outcome o;
  for (double lambda : {1.0, 0.0}) {
    RunConfig cfg = config(R"({"experiment": "crossval", "grid": {"dim": 1, "N": 1024, "L": 40},
                               "kernel": {"kind": "homogeneous", "gamma": 0.4}, "time": {"T": 0.05}})");
    cfg.kernel.lambda = lambda;
    const ExperimentReport r = run_experiment(cfg);
    o.require(r.passed(), "lambda=%g sup gap=%.1e (<= %.0e)", lambda, metric(r, "discrepancy").value,
              metric(r, "discrepancy").bound);
  }
  return o;
}

// 9. Wiener algebra, embedding and free-flow invariance
Outcome wiener_algebra() {
  Outcome o;
  std::mt19937_64 rng(20240517);
  int algebra = 0, embedding = 0, unitarity = 0;
  double worst_unitarity = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 1 + trial % 3;
    const std::size_t n = d == 1 ? 128 : (d == 2 ? 32 : 12);
    const Grid g(d, n, 6.0 + (trial % 7));
    const long kmax = static_cast<long>(n / 6) - 1;
    const Field f = random_band_limited(g, rng, kmax);
    const Field h = random_band_limited(g, rng, kmax);
    Field fh(g);
    for (std::size_t i = 0; i < g.size(); ++i) fh[i] = f[i] * h[i];
    const double wf = norm_wiener(f), wh = norm_wiener(h);
    if (norm_wiener(fh) > wf * wh * (1.0 + 1e-10)) ++algebra;
    if (norm_lp(f, kInfinity) > std::pow(2.0 * kPi, -0.5 * d) * wf * (1.0 + 1e-10)) ++embedding;
    const double drift = std::abs(norm_wiener(free_evolve(f, 0.1 + 0.01 * trial)) / wf - 1.0);
    worst_unitarity = std::max(worst_unitarity, drift);
    if (drift > 1e-12) ++unitarity;
  }
  o.require(algebra == 0 && embedding == 0 && unitarity == 0,
            "failures algebra=%d embedding=%d unitarity=%d (worst %.1e)", algebra, embedding, unitarity,
            worst_unitarity);
  return o;
}

// 10. Strichartz ratios for (inf, 2) and (20, 2.5)
Outcome strichartz() {
  Outcome o;
  const ExperimentReport r = run_experiment(config(R"({"experiment": "strichartz",
      "grid": {"dim": 1, "N": 512, "L": 40}, "time": {"T": 2},
      "strichartz": {"q_space": 2.5, "samples": 20, "time_samples": 256}})"));
  o.require(metric(r, "energy_pair_unitarity").pass, "|R(inf,2)-1|=%.1e", metric(r, "energy_pair_unitarity").value);
  o.require(metric(r, "energy_pair_refinement").pass && metric(r, "pair_refinement").pass,
            "doubling change=%.1e", metric(r, "pair_refinement").value);
  o.require(metric(r, "max_ratio").pass, "max ratio=%.3f (<= %.0f)", metric(r, "max_ratio").value,
            metric(r, "max_ratio").bound);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"L2 conservation", l2_conservation},
      {"kernel constant oracle", kernel_constant},
      {"scaling identity", scaling_identity},
      {"inflation exponent", inflation_exponent},
      {"truncated-kernel inflation", truncated_inflation},
      {"tail-norm law", tail_norm_law},
      {"Taylor law", taylor_law},
      {"solver agreement", solver_agreement},
      {"Wiener algebra invariants", wiener_algebra},
      {"Strichartz boundedness", strichartz},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %-28s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
