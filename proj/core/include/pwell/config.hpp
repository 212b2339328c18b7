#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pwell/constants.hpp"
#include "pwell/evolution.hpp"
#include "pwell/params.hpp"

namespace pwell {

enum class ProfileKind { power, bump, eigen, inline_samples };

struct InitialProfile {
  ProfileKind kind = ProfileKind::eigen;
  double amplitude = 1.0;
  double exponent = 1.0;        // beta of (1 - r/R)^beta, k of (1 - rho^2)^k
  std::vector<double> samples;  // cell-center values for kind == inline_samples
};

struct OutputPaths {
  std::string csv = "series.csv";
  std::string json = "report.json";
  std::string report = "report.txt";
  std::string plot = "plot.csv";
};

/// Flat JSON document. Recognized keys:
///
///   p q N s R                     problem parameters
///   grid_cells                    number of radial cells (>= 4)
///   profile                       "power" | "bump" | "eigen" | "inline"
///   amplitude profile_exponent    scaling and exponent of the named profile
///   profile_samples               array of cell-center values for "inline"
///   dt0 t_max blowup_threshold dt_floor theta_impl monitor_stride
///   fit_samples include_source    solver settings
///   alpha_samples family_size safety_factor descent_steps
///   seed
///   csv json report plot          output file names, relative to --out
///
/// Missing keys keep their defaults; unknown keys are rejected.
struct ExperimentConfig {
  Params params;
  int grid_cells = 200;
  InitialProfile profile;
  SolverConfig solver;
  ConstantsOptions constants;
  int descent_steps = 200;
  std::uint64_t seed = 0;
  OutputPaths outputs;
  std::string name;  // defaults to the config file stem
};

/// Throws ParseError (with line and column) for malformed JSON or wrongly
/// typed values, ConfigError for unknown keys, and ValidationError listing
/// every violated clause of the parameter regime and the other invariants.
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config(const std::filesystem::path& path);

// Every failed invariant of a config; empty when valid.
std::vector<std::string> config_violations(const ExperimentConfig& cfg);

nlohmann::json to_json(const ExperimentConfig& cfg);

const char* to_string(ProfileKind k);

}  // namespace pwell
