#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pwell/checker.hpp"
#include "pwell/config.hpp"
#include "pwell/constants.hpp"
#include "pwell/evolution.hpp"
#include "pwell/lemmas.hpp"
#include "pwell/nehari.hpp"

namespace pwell {

struct ResidualSummary {
  double energy_identity = 0.0;
  double dL_dt = 0.0;
};

struct RunReport {
  ExperimentConfig config;
  WellConstants constants;
  double d_est = 0.0;
  std::string d_label;
  WellVerdict classification;
  Trajectory trajectory;
  std::vector<BoundReport> bounds;
  ResidualSummary residuals;
};

RadialField initial_field(const std::shared_ptr<const RadialGrid>& grid, const InitialProfile& prof);

// Constants and the mountain-pass estimate for a config; shared by the
// constants, classify and run commands.
struct WellSetup {
  std::shared_ptr<const RadialGrid> grid;
  WellConstants constants;
  DEstimate d;
};

WellSetup prepare_well(const ExperimentConfig& cfg);

RunReport run_experiment(const ExperimentConfig& cfg);

struct LemmaSuite {
  LogInequalityReport log;
  std::vector<std::pair<double, ConcavityResult>> concavity;  // keyed by theta
  HardySobolevReport hardy;

  bool passed() const;
};

LemmaSuite verify_lemmas(const ExperimentConfig& cfg, std::uint64_t log_samples = 1000000);

struct SweepEntry {
  std::filesystem::path config;
  std::filesystem::path out_dir;
  int status = 0;  // CLI exit-code convention
  std::string message;
};

/// Runs every *.json config in `dir` (sorted by name) in parallel; each run
/// writes into out_root/<config stem>/.
std::vector<SweepEntry> run_sweep(const std::filesystem::path& dir,
                                  const std::filesystem::path& out_root);

nlohmann::json to_json(const RunReport& r);
nlohmann::json to_json(const LemmaSuite& s);

std::string text_report(const RunReport& r);
std::string text_report(const LemmaSuite& s);

// Exit code for an exception: 1 for input errors, 2 for numerical errors.
int exit_code_for(const std::exception& e);

}  // namespace pwell
