#include "pwell/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <set>

#include <fmt/format.h>

#include "pwell/error.hpp"

namespace pwell {

using nlohmann::json;

const char* to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::power: return "power";
    case ProfileKind::bump: return "bump";
    case ProfileKind::eigen: return "eigen";
    case ProfileKind::inline_samples: return "inline";
  }
  return "?";
}

namespace {

// Line and column (1-based) of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "p", "q", "N", "s", "R", "grid_cells", "profile", "amplitude", "profile_exponent",
      "profile_samples", "dt0", "t_max", "blowup_threshold", "dt_floor", "theta_impl",
      "monitor_stride", "fit_samples", "include_source", "alpha_samples", "family_size",
      "safety_factor", "descent_steps", "seed", "csv", "json", "report", "plot", "name"};
  return keys;
}

template <class T>
void read(const json& doc, const char* key, T& out) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception& e) {
    throw ParseError(fmt::format("key '{}': {}", key, e.what()));
  }
}

void read_number(const json& doc, const char* key, double& out) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  if (!it->is_number()) throw ParseError(fmt::format("key '{}' must be a number", key));
  out = it->get<double>();
}

void read_int(const json& doc, const char* key, int& out) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  if (!it->is_number_integer()) throw ParseError(fmt::format("key '{}' must be an integer", key));
  out = it->get<int>();
}

}  // namespace

std::vector<std::string> config_violations(const ExperimentConfig& cfg) {
  std::vector<std::string> bad = cfg.params.violations();
  if (cfg.grid_cells < 4) bad.push_back(fmt::format("grid_cells >= 4 fails ({})", cfg.grid_cells));
  if (!std::isfinite(cfg.profile.amplitude)) bad.push_back("amplitude must be finite");
  if (cfg.profile.kind != ProfileKind::eigen && cfg.profile.kind != ProfileKind::inline_samples &&
      !(cfg.profile.exponent > 0.0)) {
    bad.push_back("profile_exponent > 0 fails");
  }
  if (cfg.profile.kind == ProfileKind::inline_samples) {
    if (cfg.profile.samples.size() != static_cast<std::size_t>(cfg.grid_cells)) {
      bad.push_back(fmt::format("profile_samples has {} values but grid_cells is {}",
                                cfg.profile.samples.size(), cfg.grid_cells));
    }
    for (double v : cfg.profile.samples) {
      if (!std::isfinite(v)) {
        bad.push_back("profile_samples must be finite");
        break;
      }
    }
  }
  try {
    cfg.solver.validate();
  } catch (const ValidationError& e) {
    bad.insert(bad.end(), e.clauses().begin(), e.clauses().end());
  }
  if (cfg.constants.alpha_samples < 3) bad.push_back("alpha_samples >= 3 fails");
  if (cfg.constants.family_size < 1) bad.push_back("family_size >= 1 fails");
  if (!(cfg.constants.safety_factor >= 1.0)) bad.push_back("safety_factor >= 1 fails");
  if (cfg.descent_steps < 0) bad.push_back("descent_steps >= 0 fails");
  for (const auto* path : {&cfg.outputs.csv, &cfg.outputs.json, &cfg.outputs.report, &cfg.outputs.plot}) {
    if (path->empty()) bad.push_back("output file names must be non-empty");
  }
  return bad;
}

ExperimentConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(fmt::format("line {}, column {}: {}", line, col, e.what()));
  }
  if (!doc.is_object()) throw ParseError("line 1, column 1: config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!known_keys().count(key)) throw ConfigError(fmt::format("unknown config key '{}'", key));
  }

  ExperimentConfig cfg;
  read_number(doc, "p", cfg.params.p);
  read_number(doc, "q", cfg.params.q);
  read_int(doc, "N", cfg.params.N);
  read_number(doc, "s", cfg.params.s);
  read_number(doc, "R", cfg.params.R);
  read_int(doc, "grid_cells", cfg.grid_cells);

  std::string profile = to_string(cfg.profile.kind);
  read(doc, "profile", profile);
  if (profile == "power") {
    cfg.profile.kind = ProfileKind::power;
  } else if (profile == "bump") {
    cfg.profile.kind = ProfileKind::bump;
    cfg.profile.exponent = 2.0;
  } else if (profile == "eigen") {
    cfg.profile.kind = ProfileKind::eigen;
  } else if (profile == "inline") {
    cfg.profile.kind = ProfileKind::inline_samples;
  } else {
    throw ParseError(fmt::format("key 'profile': unknown profile '{}'", profile));
  }
  read_number(doc, "amplitude", cfg.profile.amplitude);
  read_number(doc, "profile_exponent", cfg.profile.exponent);
  read(doc, "profile_samples", cfg.profile.samples);
  if (cfg.profile.kind == ProfileKind::inline_samples && !doc.contains("grid_cells")) {
    cfg.grid_cells = static_cast<int>(cfg.profile.samples.size());
  }

  read_number(doc, "dt0", cfg.solver.dt0);
  read_number(doc, "t_max", cfg.solver.t_max);
  read_number(doc, "blowup_threshold", cfg.solver.blowup_threshold);
  read_number(doc, "dt_floor", cfg.solver.dt_floor);
  read_number(doc, "theta_impl", cfg.solver.theta_impl);
  read_int(doc, "monitor_stride", cfg.solver.monitor_stride);
  read_int(doc, "fit_samples", cfg.solver.fit_samples);
  read(doc, "include_source", cfg.solver.include_source);

  read_int(doc, "alpha_samples", cfg.constants.alpha_samples);
  read_int(doc, "family_size", cfg.constants.family_size);
  read_number(doc, "safety_factor", cfg.constants.safety_factor);
  read_int(doc, "descent_steps", cfg.descent_steps);
  read(doc, "seed", cfg.seed);

  read(doc, "csv", cfg.outputs.csv);
  read(doc, "json", cfg.outputs.json);
  read(doc, "report", cfg.outputs.report);
  read(doc, "plot", cfg.outputs.plot);
  read(doc, "name", cfg.name);

  auto bad = config_violations(cfg);
  if (!bad.empty()) throw ValidationError(std::move(bad));
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot read config '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  auto cfg = parse_config(ss.str());
  if (cfg.name.empty()) cfg.name = path.stem().string();
  return cfg;
}

json to_json(const ExperimentConfig& cfg) {
  json j{{"name", cfg.name},
         {"p", cfg.params.p},
         {"q", cfg.params.q},
         {"N", cfg.params.N},
         {"s", cfg.params.s},
         {"R", cfg.params.R},
         {"grid_cells", cfg.grid_cells},
         {"profile", to_string(cfg.profile.kind)},
         {"amplitude", cfg.profile.amplitude},
         {"profile_exponent", cfg.profile.exponent},
         {"dt0", cfg.solver.dt0},
         {"t_max", cfg.solver.t_max},
         {"blowup_threshold", cfg.solver.blowup_threshold},
         {"dt_floor", cfg.solver.dt_floor},
         {"theta_impl", cfg.solver.theta_impl},
         {"monitor_stride", cfg.solver.monitor_stride},
         {"fit_samples", cfg.solver.fit_samples},
         {"include_source", cfg.solver.include_source},
         {"alpha_samples", cfg.constants.alpha_samples},
         {"family_size", cfg.constants.family_size},
         {"safety_factor", cfg.constants.safety_factor},
         {"descent_steps", cfg.descent_steps},
         {"seed", cfg.seed}};
  if (cfg.profile.kind == ProfileKind::inline_samples) j["profile_samples"] = cfg.profile.samples;
  return j;
}

}  // namespace pwell
