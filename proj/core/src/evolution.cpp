#include "pwell/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>
#include <lapacke.h>

#include "pwell/error.hpp"

namespace pwell {

void SolverConfig::validate() const {
  std::vector<std::string> bad;
  if (!(dt_floor > 0.0)) bad.push_back("dt_floor > 0 fails");
  if (!(dt0 > dt_floor)) bad.push_back("dt0 > dt_floor fails");
  if (!(t_max > 0.0)) bad.push_back("t_max > 0 fails");
  if (!(blowup_threshold > 1.0)) bad.push_back("blowup_threshold > 1 fails");
  if (!(theta_impl >= 0.0 && theta_impl <= 1.0)) bad.push_back("theta_impl in [0, 1] fails");
  if (monitor_stride < 1) bad.push_back("monitor_stride >= 1 fails");
  if (fit_samples < 2) bad.push_back("fit_samples >= 2 fails");
  if (!bad.empty()) throw ValidationError(std::move(bad));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::global_to_horizon:
      return "global_to_horizon";
    case Verdict::blowup:
      return "blowup";
    case Verdict::step_floor_hit:
      return "step_floor_hit";
  }
  return "unknown";
}

namespace {

double source(double u, double q) {
  const double a = std::abs(u);
  if (a == 0.0) return 0.0;
  return std::pow(a, q - 2.0) * u * std::log(a);
}

// c_f = a_f |D_f|^{p-2} / spacing_f^2 for faces f = 1..M (index f-1).
void frozen_coefficients(const RadialField& u, double p, std::vector<double>& c) {
  const RadialGrid& g = u.grid();
  const int M = g.cells();
  const auto a = g.face_weights();
  c.resize(M);
  for (int f = 1; f <= M; ++f) {
    const double hf = g.face_spacing(f);
    const double diff = f < M ? u[f] - u[f - 1] : -u[M - 1];
    const double slope = std::abs(diff / hf);
    const double k = p == 2.0 ? 1.0 : (slope == 0.0 ? 0.0 : std::pow(slope, p - 2.0));
    c[f - 1] = a[f - 1] * k / (hf * hf);
  }
}

}  // namespace

RadialField step(const RadialField& u, double dt, const Params& params, double theta,
                 bool include_source) {
  if (!(dt > 0.0)) throw ConfigError("time step must be positive");
  if (!u.is_finite()) throw NumericalError("non-finite state entering the time step");
  const RadialGrid& g = u.grid();
  const int M = g.cells();
  const auto m = g.singular_volumes();
  const auto w = g.volumes();

  std::vector<double> c;
  frozen_coefficients(u, params.p, c);

  // K: diag_i = c_i + c_{i+1} (face i absent for i = 0), off_i = -c_{i+1}.
  std::vector<double> diag(M), off(M > 1 ? M - 1 : 0), rhs(M);
  for (int i = 0; i < M; ++i) {
    const double left = i > 0 ? c[i - 1] : 0.0;  // face i
    const double right = c[i];                   // face i+1
    const double Ku = (left + right) * u[i] - (i > 0 ? left * u[i - 1] : 0.0) -
                      (i + 1 < M ? right * u[i + 1] : 0.0);
    diag[i] = m[i] / dt + theta * (left + right);
    if (i + 1 < M) off[i] = -theta * right;
    rhs[i] = m[i] / dt * u[i] - (1.0 - theta) * Ku;
    if (include_source) rhs[i] += w[i] * source(u[i], params.q);
  }

  const lapack_int info = LAPACKE_dptsv(LAPACK_COL_MAJOR, M, 1, diag.data(), off.data(),
                                        rhs.data(), M);
  if (info != 0) {
    throw NumericalError(fmt::format("tridiagonal solve failed (LAPACK info = {})", info));
  }
  RadialField out(u.grid_ptr(), std::move(rhs));
  if (!out.is_finite()) throw NumericalError("time step produced a non-finite state");
  return out;
}

double adaptive_dt(double dt0, double max_abs, double q) {
  return dt0 / (1.0 + std::pow(max_abs, q - 2.0) * std::log(std::numbers::e + max_abs));
}

namespace {

void record(Trajectory& traj, double t, const RadialField& u, const Params& params,
            double dissipation, double dt) {
  traj.times.push_back(t);
  traj.reports.push_back(evaluate(u, params));
  traj.dissipation.push_back(dissipation);
  traj.dts.push_back(dt);
  traj.max_abs.push_back(u.max_abs());
}

void fit_blowup_time(Trajectory& traj, const Params& params, int fit_samples) {
  const std::size_t n = traj.size();
  const std::size_t k = std::min<std::size_t>(fit_samples, n);
  const double e = (2.0 - params.q) / 2.0;
  const double t_ref = traj.times.back();
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = n - k; i < n; ++i) {
    const double t = traj.times[i] - t_ref;
    const double y = std::pow(traj.reports[i].L, e);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  const double det = k * stt - st * st;
  if (k < 2 || !(det > 0.0)) {
    traj.T_num = t_ref;
    traj.fit_slope = 0.0;
    traj.fit_intercept = std::pow(traj.reports.back().L, e);
    return;
  }
  const double slope = (k * sty - st * sy) / det;
  const double icpt = (sy - slope * st) / k;
  // Line in absolute time: y = fit_intercept + fit_slope t.
  traj.fit_slope = slope;
  traj.fit_intercept = icpt - slope * t_ref;
  traj.T_num = slope < 0.0 ? t_ref - icpt / slope : t_ref;
}

}  // namespace

Trajectory run(const RadialField& u0, const Params& params, const SolverConfig& cfg) {
  cfg.validate();
  if (!u0.is_finite()) throw NumericalError("initial field is not finite");
  const auto m = u0.grid().singular_volumes();

  Trajectory traj;
  traj.T_num = std::numeric_limits<double>::quiet_NaN();
  record(traj, 0.0, u0, params, 0.0, 0.0);
  const double L0 = traj.reports.front().L;
  const double L_stop = cfg.blowup_threshold * L0;

  RadialField u = u0;
  double t = 0.0;
  double dissipation = 0.0;
  std::size_t since_sample = 0;
  const double t_eps = 1e-12 * cfg.t_max;
  while (cfg.t_max - t > t_eps) {
    double dt = adaptive_dt(cfg.dt0, u.max_abs(), params.q);
    if (dt < cfg.dt_floor) {
      traj.verdict = Verdict::step_floor_hit;
      if (since_sample != 0) record(traj, t, u, params, dissipation, traj.dts.back());
      break;
    }
    dt = std::min(dt, cfg.t_max - t);
    RadialField next = step(u, dt, params, cfg.theta_impl, cfg.include_source);
    double rate = 0.0;
    double L = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) {
      const double v = (next[i] - u[i]) / dt;
      rate += m[i] * v * v;
      L += m[i] * next[i] * next[i];
    }
    L *= 0.5;
    dissipation += rate * dt;
    u = std::move(next);
    t += dt;
    ++traj.steps;
    ++since_sample;

    const bool blew_up = L0 > 0.0 && L >= L_stop;
    const bool done = cfg.t_max - t <= t_eps;
    if (blew_up || done || since_sample >= static_cast<std::size_t>(cfg.monitor_stride)) {
      record(traj, done ? cfg.t_max : t, u, params, dissipation, dt);
      since_sample = 0;
    }
    if (blew_up) {
      traj.verdict = Verdict::blowup;
      fit_blowup_time(traj, params, cfg.fit_samples);
      break;
    }
  }
  traj.final_field = std::move(u);
  return traj;
}

double energy_identity_residual(const Trajectory& traj, std::size_t k) {
  if (k >= traj.size()) throw ConfigError("sample index out of range");
  const double J0 = traj.reports.front().J;
  return std::abs(traj.dissipation[k] + traj.reports[k].J - J0) / (1.0 + std::abs(J0));
}

double dL_dt_residual(const Trajectory& traj, std::size_t k) {
  if (k == 0 || k + 1 >= traj.size()) throw ConfigError("dL/dt residual needs an interior sample");
  const double h1 = traj.times[k] - traj.times[k - 1];
  const double h2 = traj.times[k + 1] - traj.times[k];
  const double f0 = 2.0 * traj.reports[k - 1].L;
  const double f1 = 2.0 * traj.reports[k].L;
  const double f2 = 2.0 * traj.reports[k + 1].L;
  const double deriv = -h2 / (h1 * (h1 + h2)) * f0 + (h2 - h1) / (h1 * h2) * f1 +
                       h1 / (h2 * (h1 + h2)) * f2;
  const double I = traj.reports[k].I;
  return std::abs(deriv + 2.0 * I) / (1.0 + std::abs(I));
}

double max_energy_identity_residual(const Trajectory& traj) {
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    worst = std::max(worst, energy_identity_residual(traj, k));
  }
  return worst;
}

double max_dL_dt_residual(const Trajectory& traj) {
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < traj.size(); ++k) {
    worst = std::max(worst, dL_dt_residual(traj, k));
  }
  return worst;
}

nlohmann::json to_json(const Trajectory& traj) {
  nlohmann::json j;
  j["verdict"] = to_string(traj.verdict);
  j["T_num"] = traj.verdict == Verdict::blowup ? nlohmann::json(traj.T_num) : nlohmann::json();
  j["steps"] = traj.steps;
  j["fit"] = {{"intercept", traj.fit_intercept}, {"slope", traj.fit_slope}};
  auto& samples = j["samples"] = nlohmann::json::array();
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const EnergyReport& r = traj.reports[k];
    samples.push_back({{"t", traj.times[k]},
                       {"L", r.L},
                       {"J", r.J},
                       {"I", r.I},
                       {"grad_p", r.grad_p},
                       {"lq_q", r.lq_q},
                       {"log_term", r.log_term},
                       {"dissipation", traj.dissipation[k]},
                       {"dt", traj.dts[k]},
                       {"max_abs", traj.max_abs[k]}});
  }
  return j;
}

}  // namespace pwell
