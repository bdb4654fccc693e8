#include "hartree/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "hartree/error.hpp"
#include "hartree/field_io.hpp"

namespace hartree {
namespace {

using nlohmann::json;

json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

}  // namespace

bool ExperimentReport::passed() const {
  for (const auto& m : metrics)
    if (!m.pass) return false;
  return true;
}

const Metric* ExperimentReport::find(const std::string& name) const {
  for (const auto& m : metrics)
    if (m.name == name) return &m;
  return nullptr;
}

void ExperimentReport::upper(std::string name, double value, double bound, std::string note) {
  metrics.push_back({std::move(name), value, "<=", bound, value <= bound, std::move(note)});
}

void ExperimentReport::lower(std::string name, double value, double bound, std::string note) {
  metrics.push_back({std::move(name), value, ">=", bound, value >= bound, std::move(note)});
}

void ExperimentReport::check(std::string name, bool ok, std::string note) {
  metrics.push_back({std::move(name), ok ? 1.0 : 0.0, ">=", 1.0, ok, std::move(note)});
}

void ExperimentReport::info(std::string name, double value, std::string note) {
  metrics.push_back({std::move(name), value, "info", 0.0, true, std::move(note)});
}

std::string report_to_json(const ExperimentReport& r) {
  json metrics = json::array();
  for (const auto& m : r.metrics) {
    json entry{{"name", m.name}, {"value", number(m.value)}, {"relation", m.relation}, {"pass", m.pass}};
    if (m.relation != "info") entry["bound"] = number(m.bound);
    if (!m.note.empty()) entry["note"] = m.note;
    metrics.push_back(std::move(entry));
  }
  json curves = json::array();
  for (const auto& c : r.curves) curves.push_back({{"name", c.name}, {"file", c.name + ".csv"}, {"columns", c.columns}});

  json doc{
      {"experiment", r.experiment},
      {"pass", r.passed()},
      {"config", json::parse(r.config_json)},
      {"metrics", std::move(metrics)},
      {"curves", std::move(curves)},
      {"environment", {{"version", kVersion}, {"grid", r.grid}, {"threads", r.threads}}},
      {"wall_clock_seconds", r.wall_seconds},
  };
  return doc.dump(2) + "\n";
}

std::string curve_to_csv(const Curve& c) {
  std::string out;
  for (std::size_t i = 0; i < c.columns.size(); ++i) {
    if (i) out += ',';
    out += c.columns[i];
  }
  out += '\n';
  char buf[40];
  for (const auto& row : c.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void write_report(const ExperimentReport& report, const std::filesystem::path& dir) {
  ensure_dir(dir);
  write_text(dir / "report.json", report_to_json(report));
  for (const auto& c : report.curves) write_text(dir / (c.name + ".csv"), curve_to_csv(c));
}

void write_trajectory(const Trajectory& tr, const std::filesystem::path& dir, const std::string& prefix) {
  ensure_dir(dir);
  json samples = json::array();
  for (std::size_t m = 0; m < tr.size(); ++m) {
    char name[64];
    std::snprintf(name, sizeof name, "%s_%05zu.hwf", prefix.c_str(), m);
    write_field(tr.field(m), dir / name);
    samples.push_back({{"index", m}, {"t", tr.time(m)}, {"file", name}});
  }
  json manifest{{"format", "HWF1"}, {"samples", std::move(samples)}};
  if (!tr.empty()) {
    const Grid& g = tr.field(0).grid();
    manifest["grid"] = {{"dim", g.dim()}, {"N", g.n()}, {"L", g.length()}};
  }
  write_text(dir / (prefix + "_manifest.json"), manifest.dump(2) + "\n");
}

}  // namespace hartree
