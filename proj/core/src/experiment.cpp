#include "pwell/experiment.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include <fmt/format.h>

#include "pwell/error.hpp"
#include "pwell/io.hpp"
#include "pwell/profiles.hpp"

namespace pwell {

RadialField initial_field(const std::shared_ptr<const RadialGrid>& grid, const InitialProfile& prof) {
  switch (prof.kind) {
    case ProfileKind::power:
      return make_profile(grid, ProfileShape{1.0, prof.exponent, 1.0, 0.0}, prof.amplitude);
    case ProfileKind::bump:
      return make_profile(grid, ProfileShape{2.0, prof.exponent, 1.0, 0.0}, prof.amplitude);
    case ProfileKind::eigen:
      return eigen_profile(grid, prof.amplitude);
    case ProfileKind::inline_samples: {
      if (prof.samples.size() != static_cast<std::size_t>(grid->cells())) {
        throw ConfigError("inline profile size does not match the grid");
      }
      std::vector<double> v = prof.samples;
      for (double& x : v) x *= prof.amplitude;
      return RadialField(grid, std::move(v));
    }
  }
  throw ConfigError("unknown profile kind");
}

WellSetup prepare_well(const ExperimentConfig& cfg) {
  WellSetup w;
  w.grid = make_grid(cfg.params, cfg.grid_cells);
  w.constants = estimate_well_constants(cfg.params, w.grid, cfg.constants);
  DOptions dopt;
  dopt.family_size = cfg.constants.family_size;
  dopt.descent_steps = cfg.descent_steps;
  dopt.seed = cfg.seed;
  w.d = estimate_d(w.grid, cfg.params, dopt);
  return w;
}

RunReport run_experiment(const ExperimentConfig& cfg) {
  auto bad = config_violations(cfg);
  if (!bad.empty()) throw ValidationError(std::move(bad));

  RunReport r;
  r.config = cfg;
  auto well = prepare_well(cfg);
  r.constants = well.constants;
  r.d_est = well.d.value;
  r.d_label = well.d.label;

  const RadialField u0 = initial_field(well.grid, cfg.profile);
  r.classification = classify(u0, cfg.params, r.d_est);
  r.trajectory = run(u0, cfg.params, cfg.solver);
  r.bounds = check_trajectory(r.trajectory, cfg.params, r.constants);
  r.residuals.energy_identity = max_energy_identity_residual(r.trajectory);
  r.residuals.dL_dt = max_dL_dt_residual(r.trajectory);
  return r;
}

bool LemmaSuite::passed() const {
  if (!log.passed()) return false;
  for (const auto& [theta, c] : concavity) {
    if (!(c.observed_blowup <= c.t2 * (1.0 + 1e-3))) return false;
  }
  return hardy.bounded;
}

LemmaSuite verify_lemmas(const ExperimentConfig& cfg, std::uint64_t log_samples) {
  LemmaSuite s;
  s.log = verify_log_inequalities(log_samples, cfg.seed);
  for (double theta : {0.5, 1.0, 2.0}) s.concavity.emplace_back(theta, concavity_blowup_oracle(theta, 1.0, 1.0));
  auto grid = make_grid(cfg.params, cfg.grid_cells);
  s.hardy = verify_hardy_sobolev(grid, cfg.params, cfg.constants.family_size,
                                 cfg.constants.safety_factor, 200, cfg.seed);
  return s;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return 1;
  return 2;
}

std::vector<SweepEntry> run_sweep(const std::filesystem::path& dir,
                                  const std::filesystem::path& out_root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ConfigError(fmt::format("'{}' is not a directory", dir.string()));
  std::vector<SweepEntry> entries;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") {
      entries.push_back({e.path(), out_root / e.path().stem(), 0, ""});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const SweepEntry& a, const SweepEntry& b) { return a.config < b.config; });

  auto work = [](SweepEntry& entry) {
    try {
      const auto cfg = load_config(entry.config);
      const auto report = run_experiment(cfg);
      write_artifacts(report, entry.out_dir);
      entry.message = to_string(report.trajectory.verdict);
    } catch (const std::exception& ex) {
      entry.status = exit_code_for(ex);
      entry.message = ex.what();
    }
  };

  // Bounded pool: at most hardware_concurrency runs in flight.
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < entries.size(); start += width) {
    std::vector<std::future<void>> batch;
    const std::size_t stop = std::min(entries.size(), start + width);
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, work, std::ref(entries[i])));
    }
    for (auto& f : batch) f.get();
  }
  return entries;
}

nlohmann::json to_json(const RunReport& r) {
  const auto& t = r.trajectory;
  nlohmann::json traj{{"verdict", to_string(t.verdict)},
                      {"steps", t.steps},
                      {"samples", t.size()},
                      {"t_final", t.times.empty() ? 0.0 : t.times.back()}};
  traj["T_num"] = std::isfinite(t.T_num) ? nlohmann::json(t.T_num) : nlohmann::json(nullptr);
  return {{"config", to_json(r.config)},
          {"constants", to_json(r.constants)},
          {"d_est", {{"value", r.d_est}, {"label", r.d_label}}},
          {"classification", to_json(r.classification)},
          {"trajectory_summary", traj},
          {"bound_reports", to_json(r.bounds)},
          {"residual_summary",
           {{"max_energy_identity", r.residuals.energy_identity},
            {"max_dL_dt", r.residuals.dL_dt}}}};
}

nlohmann::json to_json(const LemmaSuite& s) {
  nlohmann::json conc = nlohmann::json::array();
  for (const auto& [theta, c] : s.concavity) {
    auto j = to_json(c);
    j["theta"] = theta;
    conc.push_back(j);
  }
  return {{"log_inequalities", to_json(s.log)},
          {"concavity", conc},
          {"hardy_sobolev", to_json(s.hardy)},
          {"passed", s.passed()}};
}

std::string text_report(const RunReport& r) {
  const auto& p = r.config.params;
  std::string out = fmt::format("run {}: p = {}, q = {}, N = {}, s = {}, R = {}, cells = {}\n\n",
                                r.config.name, p.p, p.q, p.N, p.s, p.R, r.config.grid_cells);
  out += constants_table(r.constants);
  out += fmt::format("d_est (mountain-pass upper estimate) = {:.6g} [{}]\n\n", r.d_est, r.d_label);
  const auto& c = r.classification;
  out += fmt::format("initial data: {} (J = {:.6g}, I = {:.6g}, d_ref = {:.6g})\n",
                     to_string(c.label), c.J, c.I, c.d_ref);
  const auto& t = r.trajectory;
  out += fmt::format("trajectory: {} after {} steps, t = {:.6g}", to_string(t.verdict), t.steps,
                     t.times.empty() ? 0.0 : t.times.back());
  if (t.verdict == Verdict::blowup) out += fmt::format(", T_num = {:.6g}", t.T_num);
  out += "\n\n";
  out += bound_table(r.bounds);
  for (const auto& b : r.bounds) {
    if (!b.detail.empty()) out += fmt::format("  {}: {}\n", to_string(b.theorem), b.detail);
  }
  out += fmt::format("\nmax energy identity residual = {:.3e}\nmax dL/dt residual = {:.3e}\n",
                     r.residuals.energy_identity, r.residuals.dL_dt);
  return out;
}

std::string text_report(const LemmaSuite& s) {
  std::string out;
  out += fmt::format("log inequalities: {} samples, {} violations, min slack {:.3e} / {:.3e}, "
                     "equality gaps {:.1e} / {:.1e} -> {}\n",
                     s.log.samples, s.log.violations, s.log.min_slack_upper, s.log.min_slack_lower,
                     s.log.equality_gap_upper, s.log.equality_gap_lower,
                     s.log.passed() ? "pass" : "fail");
  for (const auto& [theta, c] : s.concavity) {
    out += fmt::format("concavity theta = {}: t2 = {:.9g}, observed = {:.9g} -> {}\n", theta, c.t2,
                       c.observed_blowup, c.observed_blowup <= c.t2 * (1.0 + 1e-3) ? "pass" : "fail");
  }
  out += fmt::format("weighted Hardy-Sobolev: estimate {:.6g}, max over {} probes {:.6g} -> {}\n",
                     s.hardy.estimate, s.hardy.probes, s.hardy.max_probe,
                     s.hardy.bounded ? "pass" : "fail");
  return out;
}

}  // namespace pwell
