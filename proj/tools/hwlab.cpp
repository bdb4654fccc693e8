// hwlab: run experiments and inspect HWF1 field files.

#include <cstdio>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "hartree/error.hpp"
#include "hartree/experiments.hpp"
#include "hartree/field_io.hpp"
#include "hartree/norms.hpp"

namespace {

enum ExitCode : int { kPass = 0, kMetricFailure = 1, kConfigError = 2, kIoError = 3 };

int cmd_run(const std::string& config_path, const std::string& out_dir, const std::vector<std::string>& overrides) {
  hartree::RunConfig cfg = hartree::load_config(config_path, overrides);
  if (!out_dir.empty()) cfg.io.output_dir = out_dir;
  const hartree::ExperimentReport report = hartree::run(cfg);

  std::printf("experiment %s  [%s, threads=%zu, %.2fs]\n", report.experiment.c_str(), report.grid.c_str(),
              report.threads, report.wall_seconds);
  for (const auto& m : report.metrics) {
    if (m.relation == "info") {
      std::printf("  %-28s %.6g\n", m.name.c_str(), m.value);
    } else {
      std::printf("  %-28s %.6g %s %.3g  %s\n", m.name.c_str(), m.value, m.relation.c_str(), m.bound,
                  m.pass ? "ok" : "FAIL");
    }
    if (!m.pass && !m.note.empty()) std::printf("      %s\n", m.note.c_str());
  }
  std::printf("%s -> %s\n", report.passed() ? "PASS" : "FAIL", cfg.io.output_dir.c_str());
  return report.passed() ? kPass : kMetricFailure;
}

void print_grid(const hartree::Grid& g) {
  std::printf("dim      %d\nN        %zu\nL        %.17g\ndx       %.17g\ndxi      %.17g\n", g.dim(), g.n(),
              g.length(), g.dx(), g.dxi());
}

int cmd_norms(const std::string& path) {
  const hartree::Field u = hartree::read_field(path);
  std::printf("L1       %.17g\n", hartree::norm_lp(u, 1.0));
  std::printf("L2       %.17g\n", hartree::norm_lp(u, 2.0));
  std::printf("Linf     %.17g\n", hartree::norm_lp(u, hartree::kInfinity));
  std::printf("W        %.17g\n", hartree::norm_wiener(u));
  std::printf("L2capW   %.17g\n", hartree::norm_l2_cap_w(u));
  return kPass;
}

int cmd_field_info(const std::string& path) {
  const hartree::Field u = hartree::read_field(path);
  print_grid(u.grid());
  std::printf("samples  %zu\nbytes    %zu\nfinite   %s\n", u.grid().size(), hartree::encoded_size(u.grid()),
              u.all_finite() ? "yes" : "no");
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hartree equation numerics lab"};
  app.set_version_flag("--version", std::string(hartree::kVersion));
  app.require_subcommand(1);

  std::string config_path, out_dir, field_path;
  std::vector<std::string> overrides;

  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("config", config_path, "JSON config")->required();
  run->add_option("--out", out_dir, "Output directory (overrides io.output_dir)");
  run->add_option("--override", overrides, "key=value, applied after the file")->take_all();

  auto* norms = app.add_subcommand("norms", "Print norms of an HWF1 field");
  norms->add_option("field", field_path, "HWF1 file")->required();

  auto* info = app.add_subcommand("field-info", "Print the grid of an HWF1 field");
  info->add_option("field", field_path, "HWF1 file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kConfigError;
  }

  try {
    if (*run) return cmd_run(config_path, out_dir, overrides);
    if (*norms) return cmd_norms(field_path);
    if (*info) return cmd_field_info(field_path);
  } catch (const hartree::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigError;
  } catch (const hartree::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return kIoError;
  } catch (const hartree::FormatError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return kIoError;
  } catch (const hartree::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kMetricFailure;
  }
  return kConfigError;
}
