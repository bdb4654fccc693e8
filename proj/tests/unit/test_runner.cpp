#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hartree/experiments.hpp"

using namespace hartree;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Report, PassIsTheConjunction) {
  ExperimentReport r;
  r.info("x", 1.0);
  r.upper("a", 1.0, 2.0);
  EXPECT_TRUE(r.passed());
  r.lower("b", 1.0, 2.0);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find("b")->pass);
  EXPECT_EQ(r.find("missing"), nullptr);
}

TEST(Report, JsonAndCsv) {
  ExperimentReport r;
  r.experiment = "taylor";
  r.config_json = "{}";
  r.upper("inf_metric", std::numeric_limits<double>::infinity(), 1.0);
  r.curves.push_back({"c", {"a", "b"}, {{0.1, 1.0 / 3.0}}});
  const std::string json = report_to_json(r);
  EXPECT_NE(json.find("\"version\""), std::string::npos);
  EXPECT_NE(json.find("\"inf\""), std::string::npos);
  EXPECT_NE(json.find("\"pass\": false"), std::string::npos);
  EXPECT_EQ(curve_to_csv(r.curves[0]), "a,b\n0.10000000000000001,0.33333333333333331\n");
}

TEST(Runner, LinearCrossvalIsExact) {
  const RunConfig cfg = parse_config(R"({"experiment": "crossval", "grid": {"N": 256},
                                         "kernel": {"lambda": 0}, "time": {"T": 0.05}})");
  const ExperimentReport r = run_experiment(cfg);
  EXPECT_TRUE(r.passed());
  EXPECT_LE(r.find("discrepancy")->value, 1e-12);
  EXPECT_DOUBLE_EQ(r.find("discrepancy")->bound, 1e-12);
}

TEST(Runner, NumericalFailureBecomesAFailedMetric) {
  const RunConfig cfg = parse_config(R"({"experiment": "crossval", "grid": {"N": 256},
                                         "picard": {"max_iter": 1}, "time": {"T": 0.05}})");
  ExperimentReport r;
  ASSERT_NO_THROW(r = run_experiment(cfg));
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find("picard_converged")->pass);
}

TEST(Runner, OutputsAreByteIdenticalAcrossThreadCounts) {
  const fs::path base = fs::temp_directory_path() / "hartree_runner_determinism";
  fs::remove_all(base);
  std::vector<std::string> csvs;
  for (const char* threads : {"1", "3"}) {
    setenv("HW_THREADS", threads, 1);
    RunConfig cfg = parse_config(R"({"experiment": "strichartz", "grid": {"N": 128},
                                     "time": {"T": 1.0},
                                     "strichartz": {"samples": 3, "time_samples": 32}})");
    cfg.io.output_dir = (base / threads).string();
    run(cfg);
    csvs.push_back(slurp(base / threads / "strichartz.csv"));
    EXPECT_TRUE(fs::exists(base / threads / "report.json"));

    RunConfig tay = parse_config(R"({"experiment": "taylor", "grid": {"N": 256}, "time": {"n_quad": 32}})");
    tay.io.output_dir = (base / threads).string();
    run(tay);
    csvs.push_back(slurp(base / threads / "taylor.csv"));
  }
  unsetenv("HW_THREADS");
  EXPECT_FALSE(csvs[0].empty());
  EXPECT_EQ(csvs[0], csvs[2]);
  EXPECT_EQ(csvs[1], csvs[3]);
  fs::remove_all(base);
}

TEST(Runner, ReportEchoesResolvedConfig) {
  const RunConfig cfg = parse_config(R"({"experiment": "kernel-oracle", "grid": {"N": 4096, "L": 160}})");
  const ExperimentReport r = run_experiment(cfg);
  EXPECT_EQ(r.config_json, config_to_json(cfg));
  EXPECT_NE(r.config_json.find("\"sigmas\""), std::string::npos);
}
