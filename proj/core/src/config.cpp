#include "hartree/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hartree/error.hpp"
#include "hartree/norms.hpp"

namespace hartree {
namespace {

using nlohmann::json;

constexpr std::pair<Experiment, const char*> kExperimentNames[] = {
    {Experiment::kGlobal, "global"},
    {Experiment::kInflationHomog, "inflation-homog"},
    {Experiment::kInflationTruncated, "inflation-truncated"},
    {Experiment::kTaylor, "taylor"},
    {Experiment::kStrichartz, "strichartz"},
    {Experiment::kCrossval, "crossval"},
    {Experiment::kKernelOracle, "kernel-oracle"},
};

json to_json_doc(const RunConfig& c) {
  return json{
      {"experiment", to_string(c.experiment)},
      {"grid", {{"dim", c.grid.dim}, {"N", c.grid.n}, {"L", c.grid.length}}},
      {"kernel",
       {{"kind", c.kernel.kind},
        {"lambda", c.kernel.lambda},
        {"gamma", c.kernel.gamma},
        {"h", c.kernel.h},
        {"radius", c.kernel.radius},
        {"path", c.kernel.path},
        {"zero_mode", c.kernel.zero_mode}}},
      {"initial",
       {{"profile", c.initial.profile},
        {"width", c.initial.width},
        {"amplitude", c.initial.amplitude},
        {"path", c.initial.path}}},
      {"time",
       {{"T", c.time.horizon},
        {"dt", c.time.dt},
        {"t_probe", c.time.t_probe},
        {"n_quad", c.time.n_quad},
        {"sample_stride", c.time.sample_stride}}},
      {"sweep",
       {{"h", c.sweep.h},
        {"range", {{"h_max", c.sweep.range.h_max}, {"h_min", c.sweep.range.h_min}, {"count", c.sweep.range.count}}}}},
      {"picard",
       {{"tol", c.picard.tol},
        {"max_iter", c.picard.max_iter},
        {"n_time", c.picard.n_time},
        {"ball_factor", c.picard.ball_factor},
        {"substeps", c.picard.substeps}}},
      {"taylor", {{"s", c.taylor.s}}},
      {"strichartz",
       {{"q_space", c.strichartz.q_space},
        {"samples", c.strichartz.samples},
        {"time_samples", c.strichartz.time_samples},
        {"packets", c.strichartz.packets}}},
      {"oracle",
       {{"gammas", c.oracle.gammas},
        {"sigmas", c.oracle.sigmas},
        {"xi_lo", c.oracle.xi_lo},
        {"xi_hi", c.oracle.xi_hi}}},
      {"io", {{"output_dir", c.io.output_dir}, {"dump_fields", c.io.dump_fields}}},
      {"seed", c.seed},
  };
}

void reject_unknown(const json& user, const json& reference, const std::string& prefix) {
  if (!user.is_object()) throw ConfigError((prefix.empty() ? "config" : prefix) + ": expected an object");
  for (const auto& [key, value] : user.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (!reference.contains(key)) throw ConfigError(path + ": unknown key");
    if (reference.at(key).is_object()) reject_unknown(value, reference.at(key), path);
  }
}

template <class T>
T read(const json& doc, const std::string& dotted) {
  const json* node = &doc;
  std::stringstream ss(dotted);
  std::string part;
  while (std::getline(ss, part, '.')) node = &node->at(part);
  try {
    if constexpr (std::is_unsigned_v<T>) {
      if (node->is_number_integer() && node->get<long long>() < 0) throw ConfigError(dotted + ": must be >= 0");
    }
    if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
      if (!node->is_number_integer()) throw ConfigError(dotted + ": expected an integer");
    }
    return node->get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(dotted + ": " + e.what());
  }
}

RunConfig from_json_doc(const json& d) {
  RunConfig c;
  c.experiment = experiment_from_string(read<std::string>(d, "experiment"));
  c.grid.dim = read<int>(d, "grid.dim");
  c.grid.n = read<std::size_t>(d, "grid.N");
  c.grid.length = read<double>(d, "grid.L");
  c.kernel.kind = read<std::string>(d, "kernel.kind");
  c.kernel.lambda = read<double>(d, "kernel.lambda");
  c.kernel.gamma = read<double>(d, "kernel.gamma");
  c.kernel.h = read<double>(d, "kernel.h");
  c.kernel.radius = read<double>(d, "kernel.radius");
  c.kernel.path = read<std::string>(d, "kernel.path");
  c.kernel.zero_mode = read<double>(d, "kernel.zero_mode");
  c.initial.profile = read<std::string>(d, "initial.profile");
  c.initial.width = read<double>(d, "initial.width");
  c.initial.amplitude = read<double>(d, "initial.amplitude");
  c.initial.path = read<std::string>(d, "initial.path");
  c.time.horizon = read<double>(d, "time.T");
  c.time.dt = read<double>(d, "time.dt");
  c.time.t_probe = read<double>(d, "time.t_probe");
  c.time.n_quad = read<std::size_t>(d, "time.n_quad");
  c.time.sample_stride = read<std::size_t>(d, "time.sample_stride");
  c.sweep.h = read<std::vector<double>>(d, "sweep.h");
  c.sweep.range.h_max = read<double>(d, "sweep.range.h_max");
  c.sweep.range.h_min = read<double>(d, "sweep.range.h_min");
  c.sweep.range.count = read<std::size_t>(d, "sweep.range.count");
  if (c.sweep.range.count > 0) {
    const auto& r = c.sweep.range;
    if (r.count < 2 || !(r.h_max > r.h_min) || !(r.h_min > 0.0))
      throw ConfigError("sweep.range: need count >= 2 and 0 < h_min < h_max");
    c.sweep.h.clear();
    for (std::size_t i = 0; i < r.count; ++i)
      c.sweep.h.push_back(r.h_max * std::pow(r.h_min / r.h_max, static_cast<double>(i) / (r.count - 1)));
  }
  c.picard.tol = read<double>(d, "picard.tol");
  c.picard.max_iter = read<int>(d, "picard.max_iter");
  c.picard.n_time = read<std::size_t>(d, "picard.n_time");
  c.picard.ball_factor = read<double>(d, "picard.ball_factor");
  c.picard.substeps = read<std::size_t>(d, "picard.substeps");
  c.taylor.s = read<std::vector<double>>(d, "taylor.s");
  c.strichartz.q_space = read<double>(d, "strichartz.q_space");
  c.strichartz.samples = read<std::size_t>(d, "strichartz.samples");
  c.strichartz.time_samples = read<std::size_t>(d, "strichartz.time_samples");
  c.strichartz.packets = read<int>(d, "strichartz.packets");
  c.oracle.gammas = read<std::vector<double>>(d, "oracle.gammas");
  c.oracle.sigmas = read<std::vector<double>>(d, "oracle.sigmas");
  c.oracle.xi_lo = read<double>(d, "oracle.xi_lo");
  c.oracle.xi_hi = read<double>(d, "oracle.xi_hi");
  c.io.output_dir = read<std::string>(d, "io.output_dir");
  c.io.dump_fields = read<bool>(d, "io.dump_fields");
  c.seed = read<std::uint64_t>(d, "seed");
  return c;
}

void apply_override(json& doc, const json& reference, const std::string& item) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("override '" + item + "': expected key=value");
  const std::string key = item.substr(0, eq);
  const std::string raw = item.substr(eq + 1);

  json* node = &doc;
  const json* ref = &reference;
  std::stringstream ss(key);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, '.')) parts.push_back(part);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!ref->is_object() || !ref->contains(parts[i])) throw ConfigError(key + ": unknown key");
    ref = &ref->at(parts[i]);
    node = &(*node)[parts[i]];
  }
  if (ref->is_object()) throw ConfigError(key + ": cannot override a whole section");
  json value = json::parse(raw, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) value = raw;
  *node = value;
}

void require(bool ok, const std::string& key, const std::string& message) {
  if (!ok) throw ConfigError(key + ": " + message);
}

}  // namespace

std::string to_string(Experiment e) {
  for (auto [value, name] : kExperimentNames)
    if (value == e) return name;
  return "unknown";
}

Experiment experiment_from_string(const std::string& name) {
  for (auto [value, n] : kExperimentNames)
    if (name == n) return value;
  throw ConfigError("experiment: unknown experiment '" + name + "'");
}

KernelSpec kernel_spec(const RunConfig& cfg) {
  const auto& k = cfg.kernel;
  if (k.kind == "homogeneous") return Homogeneous{k.lambda, k.gamma};
  if (k.kind == "truncated") return TruncatedLow{k.gamma, k.radius};
  if (k.kind == "tail") return Tail{k.gamma, k.h};
  if (k.kind == "file") return FromFile{k.path};
  if (k.kind == "delta") return Delta{};
  throw ConfigError("kernel.kind: unknown kernel kind '" + k.kind + "'");
}

void validate(const RunConfig& c) {
  require(c.grid.dim >= 1 && c.grid.dim <= 3, "grid.dim", "must be 1, 2 or 3");
  require(c.grid.n >= 2 && c.grid.n % 2 == 0, "grid.N", "must be even and >= 2");
  require(c.grid.length > 0.0, "grid.L", "must be positive");
  const double d = c.grid.dim;

  const KernelSpec spec = kernel_spec(c);
  try {
    validate(spec, c.grid.dim);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("kernel: ") + e.what());
  }
  require(c.initial.profile == "gaussian" || c.initial.profile == "file", "initial.profile",
          "must be 'gaussian' or 'file'");
  if (c.initial.profile == "gaussian") require(c.initial.width > 0.0, "initial.width", "must be positive");
  if (c.initial.profile == "file") require(!c.initial.path.empty(), "initial.path", "required for file profiles");
  require(c.io.output_dir.size() > 0, "io.output_dir", "must not be empty");

  switch (c.experiment) {
    case Experiment::kGlobal:
      require(c.kernel.kind == "homogeneous", "kernel.kind", "global experiment needs a homogeneous kernel");
      require(c.kernel.gamma > 0.0 && c.kernel.gamma < std::min(2.0, d / 2.0), "kernel.gamma",
              "global experiment requires 0 < gamma < min(2, d/2)");
      require(c.time.horizon > 0.0, "time.T", "must be positive");
      require(c.time.dt > 0.0 && c.time.dt <= c.time.horizon, "time.dt", "must lie in (0, T]");
      require(c.time.sample_stride >= 1, "time.sample_stride", "must be >= 1");
      break;
    case Experiment::kInflationHomog:
    case Experiment::kInflationTruncated: {
      const bool homog = c.experiment == Experiment::kInflationHomog;
      require(c.kernel.kind == (homog ? "homogeneous" : "truncated"), "kernel.kind",
              homog ? "inflation-homog needs a homogeneous kernel" : "inflation-truncated needs a truncated kernel");
      require(c.sweep.h.size() >= 3, "sweep.h", "needs at least 3 values");
      for (std::size_t i = 0; i < c.sweep.h.size(); ++i) {
        require(c.sweep.h[i] > 0.0 && c.sweep.h[i] <= 1.0, "sweep.h", "values must lie in (0, 1]");
        if (i > 0) require(c.sweep.h[i] < c.sweep.h[i - 1], "sweep.h", "values must decrease strictly");
      }
      require(c.time.t_probe > 0.0, "time.t_probe", "must be positive");
      require(c.time.n_quad >= 16, "time.n_quad", "must be >= 16");
      break;
    }
    case Experiment::kTaylor:
      require(c.taylor.s.size() >= 4, "taylor.s", "needs at least 4 values");
      require(c.time.n_quad >= 16, "time.n_quad", "must be >= 16");
      break;
    case Experiment::kStrichartz:
      try {
        make_admissible(c.strichartz.q_space, c.grid.dim);
      } catch (const DomainError& e) {
        throw ConfigError(std::string("strichartz.q_space: ") + e.what());
      }
      require(c.strichartz.samples >= 1, "strichartz.samples", "must be >= 1");
      require(c.strichartz.time_samples >= 16, "strichartz.time_samples", "must be >= 16");
      require(c.strichartz.packets >= 1, "strichartz.packets", "must be >= 1");
      require(c.time.horizon > 0.0, "time.T", "must be positive");
      break;
    case Experiment::kCrossval:
      require(c.time.horizon > 0.0, "time.T", "must be positive");
      require(c.picard.n_time >= 8, "picard.n_time", "must be >= 8");
      require(c.picard.tol > 0.0, "picard.tol", "must be positive");
      require(c.picard.max_iter >= 1, "picard.max_iter", "must be >= 1");
      require(c.picard.substeps >= 1, "picard.substeps", "must be >= 1");
      break;
    case Experiment::kKernelOracle:
      require(c.grid.dim == 1, "grid.dim", "kernel-oracle runs in one dimension");
      require(!c.oracle.gammas.empty(), "oracle.gammas", "must not be empty");
      for (double g : c.oracle.gammas) require(g > 0.0 && g < 1.0, "oracle.gammas", "values must lie in (0, 1)");
      require(c.oracle.sigmas.size() >= 2, "oracle.sigmas", "needs at least 2 values");
      for (double s : c.oracle.sigmas) require(s > 0.0, "oracle.sigmas", "values must be positive");
      require(c.oracle.xi_lo > 0.0 && c.oracle.xi_hi > c.oracle.xi_lo, "oracle.xi_lo", "need 0 < xi_lo < xi_hi");
      break;
  }
}

RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides) {
  const json reference = to_json_doc(RunConfig{});
  json user = json::parse(text, nullptr, false, /*ignore_comments=*/true);
  if (user.is_discarded()) throw ConfigError("config: not a valid JSON document");
  reject_unknown(user, reference, "");

  json merged = reference;
  merged.merge_patch(user);
  for (const auto& item : overrides) apply_override(merged, reference, item);
  RunConfig cfg = from_json_doc(merged);
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), overrides);
}

std::string config_to_json(const RunConfig& cfg) { return to_json_doc(cfg).dump(2); }

}  // namespace hartree
