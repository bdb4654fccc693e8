#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hartree/dynamics.hpp"
#include "hartree/kernels.hpp"

namespace hartree {

enum class Experiment {
  kGlobal,
  kInflationHomog,
  kInflationTruncated,
  kTaylor,
  kStrichartz,
  kCrossval,
  kKernelOracle,
};

std::string to_string(Experiment e);
Experiment experiment_from_string(const std::string& name);

/// Fully resolved run configuration. Every field has a default; the report
/// echoes all of them.
struct RunConfig {
  Experiment experiment = Experiment::kGlobal;

  struct GridSection {
    int dim = 1;
    std::size_t n = 1024;
    double length = 40.0;
  } grid;

  struct KernelSection {
    std::string kind = "homogeneous";  // homogeneous | truncated | tail | file | delta
    double lambda = 1.0;
    double gamma = 0.4;
    double h = 0.5;        // tail cut 1/h
    double radius = 1.0;   // truncation radius
    std::string path;      // file kernels
    double zero_mode = 0.0;
  } kernel;

  struct InitialSection {
    std::string profile = "gaussian";  // gaussian | file
    double width = 1.0;
    double amplitude = 1.0;
    std::string path;
  } initial;

  struct TimeSection {
    double horizon = 5.0;   // "T"
    double dt = 1e-3;
    double t_probe = 0.05;
    std::size_t n_quad = 64;
    std::size_t sample_stride = 10;
  } time;

  struct SweepSection {
    std::vector<double> h = {1.0, 0.7, 0.5, 0.35, 0.25, 0.18, 0.125};
    // When count > 0, h is replaced by count geometric steps from h_max to h_min.
    struct Range {
      double h_max = 1.0;
      double h_min = 0.125;
      std::size_t count = 0;
    } range;
  } sweep;

  struct PicardSection {
    double tol = 1e-10;
    int max_iter = 50;
    std::size_t n_time = 33;
    double ball_factor = 2.0;
    std::size_t substeps = 16;  // split-step steps per Picard node interval (crossval)
  } picard;

  struct TaylorSection {
    std::vector<double> s = {1e-2, 7e-3, 5e-3, 3e-3, 2e-3, 1e-3};
  } taylor;

  struct StrichartzSection {
    double q_space = 2.5;
    std::size_t samples = 20;
    std::size_t time_samples = 256;
    int packets = 3;
  } strichartz;

  struct OracleSection {
    std::vector<double> gammas = {0.3, 0.4};
    std::vector<double> sigmas = {20.0, 40.0};
    double xi_lo = 2.0;
    double xi_hi = 4.0;
  } oracle;

  struct IoSection {
    std::string output_dir = "hwlab-out";
    bool dump_fields = false;
  } io;

  std::uint64_t seed = 20240517;
};

/// Parses a JSON document, applies "dotted.key=value" overrides (values are
/// read as JSON when possible, as strings otherwise) and validates. Unknown
/// keys are rejected. Throws ConfigError naming the offending key.
RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides = {});
RunConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});

/// Experiment-specific range checks.
void validate(const RunConfig& cfg);

/// Canonical JSON echo of every field (two-space indentation).
std::string config_to_json(const RunConfig& cfg);

KernelSpec kernel_spec(const RunConfig& cfg);

}  // namespace hartree
