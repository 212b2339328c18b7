#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "pwell/functionals.hpp"
#include "pwell/grid.hpp"
#include "pwell/params.hpp"

namespace pwell {

struct SolverConfig {
  double dt0 = 1e-4;
  double t_max = 1.0;
  double blowup_threshold = 1e8;  // multiple of L(0)
  double dt_floor = 1e-14;
  double theta_impl = 1.0;
  int monitor_stride = 10;
  bool include_source = true;
  int fit_samples = 8;  // trailing samples used to extrapolate the blow-up time

  void validate() const;
};

enum class Verdict { global_to_horizon, blowup, step_floor_hit };

const char* to_string(Verdict v);

/// Sampled history of one run. Every vector is indexed by sample.
struct Trajectory {
  std::vector<double> times;
  std::vector<EnergyReport> reports;
  // Running sum of ||u_t||^2_{|x|^{-s}} dt with u_t = (u^{n+1} - u^n)/dt.
  std::vector<double> dissipation;
  std::vector<double> dts;  // last step size taken before the sample (0 at t = 0)
  std::vector<double> max_abs;
  Verdict verdict = Verdict::global_to_horizon;
  double T_num = 0.0;  // extrapolated blow-up time; NaN unless verdict == blowup
  // Least-squares line through the trailing samples of L^{(2-q)/2}(t).
  double fit_intercept = 0.0;
  double fit_slope = 0.0;
  std::size_t steps = 0;
  RadialField final_field;

  std::size_t size() const noexcept { return times.size(); }
};

/// One semi-implicit step. The p-Laplacian coefficients |grad u|^{p-2} are
/// frozen at the faces from the current state and the resulting SPD
/// tridiagonal operator K is applied with implicitness theta:
///
///   (m/dt + theta K) u^{n+1} = (m/dt) u^n - (1 - theta) K u^n + w f(u^n)
///
/// where m are the singular-weight cell volumes, w the plain cell volumes and
/// f(u) = |u|^{q-2} u ln|u| with f(0) = 0. Throws NumericalError on a
/// non-finite state or a failed factorization.
RadialField step(const RadialField& u, double dt, const Params& params, double theta = 1.0,
                 bool include_source = true);

// Step size law dt0 / (1 + |u|_inf^{q-2} ln(e + |u|_inf)).
double adaptive_dt(double dt0, double max_abs, double q);

Trajectory run(const RadialField& u0, const Params& params, const SolverConfig& cfg);

// |dissipation(t_k) + J(t_k) - J(t_0)| / (1 + |J(t_0)|)
double energy_identity_residual(const Trajectory& traj, std::size_t k);

// |d(2L)/dt(t_k) + 2 I(t_k)| / (1 + |I(t_k)|), derivative from the
// three-point formula on (t_{k-1}, t_k, t_{k+1}); centered difference when
// the samples are evenly spaced.
double dL_dt_residual(const Trajectory& traj, std::size_t k);

double max_energy_identity_residual(const Trajectory& traj);
double max_dL_dt_residual(const Trajectory& traj);

nlohmann::json to_json(const Trajectory& traj);

}  // namespace pwell
