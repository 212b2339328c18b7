#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "pwell/config.hpp"
#include "pwell/error.hpp"
#include "pwell/experiment.hpp"
#include "pwell/io.hpp"
#include "pwell/nehari.hpp"

namespace fs = std::filesystem;

namespace {

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid_cells;
  std::string out = "out";
};

pwell::ExperimentConfig resolve(const Common& c) {
  pwell::ExperimentConfig cfg = c.config.empty() ? pwell::parse_config("{}") : pwell::load_config(c.config);
  if (cfg.name.empty()) cfg.name = "run";
  if (c.seed) cfg.seed = *c.seed;
  if (c.grid_cells) {
    cfg.grid_cells = *c.grid_cells;
    auto bad = pwell::config_violations(cfg);
    if (!bad.empty()) throw pwell::ValidationError(std::move(bad));
  }
  return cfg;
}

void print_validation(const pwell::ValidationError& e) {
  std::cerr << "error: invalid input\n";
  for (const auto& c : e.clauses()) std::cerr << "  - " << c << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Potential-well experiments for the weighted p-Laplacian with logarithmic source"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub, bool with_config = true) {
    if (with_config) sub->add_option("--config", common.config, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--seed", common.seed, "override the config seed");
    sub->add_option("--grid-cells", common.grid_cells, "override the number of radial cells");
    sub->add_option("--out", common.out, "output directory");
  };

  auto* constants = app.add_subcommand("constants", "estimate embedding constants and well quantities");
  add_common(constants);
  auto* classify = app.add_subcommand("classify", "classify the initial profile against the well");
  add_common(classify);
  auto* run = app.add_subcommand("run", "full experiment: constants, classification, evolution, bounds");
  add_common(run);
  auto* sweep = app.add_subcommand("sweep", "run every config in a directory");
  std::string sweep_dir;
  sweep->add_option("dir", sweep_dir, "directory of JSON configs")->required()->check(CLI::ExistingDirectory);
  sweep->add_option("--out", common.out, "output root");
  auto* lemmas = app.add_subcommand("verify-lemmas", "check the auxiliary inequalities numerically");
  add_common(lemmas);
  std::uint64_t samples = 1000000;
  lemmas->add_option("--samples", samples, "random samples for the logarithmic inequalities");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*constants) {
      const auto cfg = resolve(common);
      const auto well = pwell::prepare_well(cfg);
      std::cout << pwell::constants_table(well.constants);
      std::cout << fmt::format("d_est = {:.6g} [{}]\n", well.d.value, well.d.label);
      auto j = pwell::to_json(well.constants);
      j["d_est"] = well.d.value;
      pwell::write_text(fs::path(common.out) / "constants.json", j.dump(2) + "\n");
    } else if (*classify) {
      const auto cfg = resolve(common);
      const auto well = pwell::prepare_well(cfg);
      const auto u0 = pwell::initial_field(well.grid, cfg.profile);
      const auto v = pwell::classify(u0, cfg.params, well.d.value);
      std::cout << fmt::format("{} (J = {:.6g}, I = {:.6g}, d_ref = {:.6g})\n", pwell::to_string(v.label),
                               v.J, v.I, v.d_ref);
      pwell::write_text(fs::path(common.out) / "classification.json", pwell::to_json(v).dump(2) + "\n");
    } else if (*run) {
      const auto cfg = resolve(common);
      const auto report = pwell::run_experiment(cfg);
      pwell::write_artifacts(report, common.out);
      std::cout << pwell::text_report(report);
    } else if (*sweep) {
      const auto entries = pwell::run_sweep(sweep_dir, common.out);
      int worst = 0;
      for (const auto& e : entries) {
        std::cout << fmt::format("{:<32} {:<6} {}\n", e.config.filename().string(),
                                 e.status == 0 ? "ok" : "error", e.message);
        worst = std::max(worst, e.status);
      }
      return worst;
    } else if (*lemmas) {
      const auto cfg = resolve(common);
      const auto suite = pwell::verify_lemmas(cfg, samples);
      std::cout << pwell::text_report(suite);
      pwell::write_text(fs::path(common.out) / "lemmas.json", pwell::to_json(suite).dump(2) + "\n");
      return suite.passed() ? 0 : 2;
    }
  } catch (const pwell::ValidationError& e) {
    print_validation(e);
    return 1;
  } catch (const pwell::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return pwell::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
