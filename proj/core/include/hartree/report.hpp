#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hartree/norms.hpp"

namespace hartree {

inline constexpr const char* kVersion = "0.1.0";

/// One checked quantity. relation is "<=", ">=" or "info" (always passes).
struct Metric {
  std::string name;
  double value = 0.0;
  std::string relation = "info";
  double bound = 0.0;
  bool pass = true;
  std::string note;
};

/// Tabular curve written as <name>.csv.
struct Curve {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct ExperimentReport {
  std::string experiment;
  std::string config_json;
  std::vector<Metric> metrics;
  std::vector<Curve> curves;
  std::string grid;
  std::size_t threads = 1;
  double wall_seconds = 0.0;

  bool passed() const;
  const Metric* find(const std::string& name) const;

  void upper(std::string name, double value, double bound, std::string note = {});
  void lower(std::string name, double value, double bound, std::string note = {});
  void check(std::string name, bool ok, std::string note = {});
  void info(std::string name, double value, std::string note = {});
};

std::string report_to_json(const ExperimentReport& report);

/// Header row then one row per sample; numbers use %.17g.
std::string curve_to_csv(const Curve& curve);

/// Writes report.json and every curve as CSV into `dir` (created if needed).
void write_report(const ExperimentReport& report, const std::filesystem::path& dir);

/// Writes each sample as <prefix>_<index>.hwf plus <prefix>_manifest.json.
void write_trajectory(const Trajectory& tr, const std::filesystem::path& dir, const std::string& prefix);

}  // namespace hartree
