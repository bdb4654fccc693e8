#pragma once

#include "hartree/config.hpp"
#include "hartree/report.hpp"

namespace hartree {

/// Pass/fail thresholds used by the experiment runner.
namespace tolerances {
inline constexpr double kL2Drift = 1e-6;
inline constexpr double kWienerGrowth = 10.0;  // omega(T) / omega(0)
inline constexpr double kWienerTrend = 1.5;    // late-window sup / early-window sup
inline constexpr double kCrossval = 1e-4;
inline constexpr double kCrossvalLinear = 1e-12;
inline constexpr double kSlope = 0.1;
inline constexpr double kCompensated = 0.05;
inline constexpr double kFamilyNorm = 5e-3;
inline constexpr double kScalingIdentity = 1e-2;
inline constexpr double kTruncatedGrowth = 10.0;
inline constexpr double kTaylorLinear = 0.01;
inline constexpr double kTaylorOrder = 1.9;
inline constexpr double kUnitarity = 1e-10;
inline constexpr double kStrichartzRefinement = 1e-2;
inline constexpr double kStrichartzBound = 5.0;
inline constexpr double kKernelConstant = 0.01;
inline constexpr double kKernelSigmaStability = 0.005;
}  // namespace tolerances

/// Runs the configured experiment. Numerical failures become failed metrics;
/// only configuration and I/O problems throw. Field dumps (io.dump_fields) are
/// written here, the report is not.
ExperimentReport run_experiment(const RunConfig& cfg);

/// run_experiment, then writes report.json and CSV curves under
/// cfg.io.output_dir.
ExperimentReport run(const RunConfig& cfg);

/// Initial datum described by cfg.initial on `grid`.
Field initial_field(const RunConfig& cfg, const Grid& grid);

}  // namespace hartree
