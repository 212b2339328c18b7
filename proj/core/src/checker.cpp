#include "pwell/checker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "pwell/error.hpp"

namespace pwell {

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T23_decay: return "T2.3_decay";
    case TheoremId::T25: return "T2.5";
    case TheoremId::T26: return "T2.6";
    case TheoremId::T27: return "T2.7";
    case TheoremId::T28: return "T2.8";
  }
  return "?";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

bool all_hold(const std::vector<Clause>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Clause& c) { return c.holds; });
}

BoundReport make(TheoremId id, std::vector<Clause> clauses) {
  BoundReport r;
  r.theorem = id;
  r.clauses = std::move(clauses);
  r.hypotheses_met = all_hold(r.clauses);
  return r;
}

// Common verdict for an upper bound on the blow-up time.
void judge_upper(BoundReport& r, const Trajectory& traj, double tol) {
  r.observed = traj.T_num;
  const double limit = r.bound_value * (1.0 + tol);
  switch (traj.verdict) {
    case Verdict::blowup:
      r.margin = limit - traj.T_num;
      r.outcome = r.margin >= 0.0 ? Outcome::pass : Outcome::fail;
      r.detail = fmt::format("T_num = {:.6g}, bound x (1+tol) = {:.6g}", traj.T_num, limit);
      break;
    case Verdict::global_to_horizon: {
      const double horizon = traj.times.empty() ? 0.0 : traj.times.back();
      r.margin = limit - horizon;
      r.outcome = horizon > limit ? Outcome::fail : Outcome::inconclusive;
      r.detail = fmt::format("no blow-up by t = {:.6g}; bound x (1+tol) = {:.6g}", horizon, limit);
      break;
    }
    case Verdict::step_floor_hit:
      r.margin = std::nan("");
      r.outcome = Outcome::inconclusive;
      r.detail = "step size floor reached before the blow-up threshold";
      break;
  }
}

}  // namespace

std::vector<BoundReport> evaluate_hypotheses(const EnergyReport& e, const Params& params,
                                             const WellConstants& wc) {
  const double p = params.p;
  const double q = params.q;
  const double J0 = e.J;
  const double L0 = e.L;
  const bool q_gt_2 = q > 2.0;
  const std::string q_clause = fmt::format("q > 2 (q = {})", q);

  std::vector<BoundReport> out;
  out.push_back(make(TheoremId::T23_decay,
                     {{fmt::format("I(u0) > 0 (I = {:.6g})", e.I), e.I > 0.0},
                      {fmt::format("J(u0) < d(alpha) (J = {:.6g}, d(alpha) = {:.6g})", J0, wc.d_alpha),
                       J0 < wc.d_alpha}}));
  out.push_back(make(TheoremId::T25,
                     {{fmt::format("J(u0) < 0 (J = {:.6g})", J0), J0 < 0.0}, {q_clause, q_gt_2}}));
  out.push_back(make(TheoremId::T26,
                     {{fmt::format("J(u0) < M (J = {:.6g}, M = {:.6g})", J0, wc.M_depth), J0 < wc.M_depth},
                      {fmt::format("I(u0) < 0 (I = {:.6g})", e.I), e.I < 0.0},
                      {q_clause, q_gt_2}}));
  const double C2J = wc.C2 * J0;
  std::vector<Clause> t27{
      {fmt::format("0 < C2 J(u0) (C2 J = {:.6g})", C2J), C2J > 0.0},
      {fmt::format("C2 J(u0) < L(0) - C1 ({:.6g} < {:.6g})", C2J, L0 - wc.C1), C2J < L0 - wc.C1},
      {q_clause, q_gt_2}};
  out.push_back(make(TheoremId::T27, t27));
  std::vector<Clause> t28 = t27;
  const double top = p * (1.0 + 2.0 / params.N);
  t28.push_back({fmt::format("q + alpha < p(1 + 2/N) for some admissible alpha ({} < {:.6g})", q, top),
                 q < top});
  out.push_back(make(TheoremId::T28, std::move(t28)));
  return out;
}

double best_lower_bound(double L0, const Params& params, const WellConstants& wc, int alphas,
                        double* best_alpha) {
  const double top = std::min(params.alpha_max(), params.p * (1.0 + 2.0 / params.N) - params.q);
  double best = std::nan("");
  if (!(top > 0.0) || alphas < 1) return best;
  const double C_star = wc.safe(wc.C_star);
  for (int k = 1; k <= alphas; ++k) {
    // Open interval (0, top): the endpoint itself is excluded by the regime.
    const double alpha = top * k / (alphas + 1.0);
    if (!lower_bound_regime(params, alpha)) continue;
    const auto lb = LowerBoundParams::make(params, alpha);
    if (!(lb.theta_exp > 0.0 && lb.theta_exp < 1.0) || !(lb.kappa_exp > 1.0)) continue;
    const double T = blowup_lower_bound_T28(L0, params, C_star, lb);
    if (std::isfinite(T) && !(T <= best)) {
      best = T;
      if (best_alpha) *best_alpha = alpha;
    }
  }
  return best;
}

std::vector<BoundReport> check_trajectory(const Trajectory& traj, const Params& params,
                                          const WellConstants& wc, const CheckOptions& opts) {
  std::vector<BoundReport> out;
  if (traj.size() == 0) return out;
  const EnergyReport& e0 = traj.reports.front();
  const double L0 = e0.L;
  const double J0 = e0.J;
  const double tol = opts.tolerance;
  const double q = params.q;
  const double p = params.p;

  for (auto& r : evaluate_hypotheses(e0, params, wc)) {
    if (!r.hypotheses_met) continue;
    switch (r.theorem) {
      case TheoremId::T23_decay: {
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < traj.size(); ++k) {
          const double env = decay_envelope(params, wc, L0, J0, traj.times[k]);
          r.envelope.push_back(env);
          worst = std::min(worst, (env * (1.0 + tol) - traj.reports[k].L) / env);
        }
        r.bound_value = r.envelope.back();
        r.observed = traj.reports.back().L;
        r.margin = worst;
        if (traj.verdict == Verdict::blowup) {
          r.outcome = Outcome::fail;
          r.detail = "blow-up detected on a run inside the decay regime";
        } else {
          r.outcome = worst >= 0.0 ? Outcome::pass : Outcome::fail;
          r.detail = fmt::format("min relative gap to envelope x (1+tol): {:.6g}", worst);
        }
        break;
      }
      case TheoremId::T25:
        r.bound_value = blowup_bound_T25(L0, J0, q);
        judge_upper(r, traj, tol);
        break;
      case TheoremId::T26:
        r.bound_value = blowup_bound_T26(L0, J0, wc.M_depth, q);
        judge_upper(r, traj, tol);
        break;
      case TheoremId::T27: {
        const auto b = blowup_bound_T27(L0, J0, params, wc);
        r.bound_value = b.bound;
        judge_upper(r, traj, tol);
        // F(t) = L - C1 - C2 J must grow at least like F(0) exp(((q-p)/p)(2/C_tilde) t).
        const double rate = (q - p) / p * 2.0 / wc.C_tilde;
        double ratio = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < traj.size(); ++k) {
          const double F = traj.reports[k].L - wc.C1 - wc.C2 * traj.reports[k].J;
          ratio = std::min(ratio, F / (b.F0 * std::exp(rate * traj.times[k])));
        }
        r.monitor_ratio = ratio;
        r.detail += fmt::format("; F(0) = {:.6g}, min F(t)/growth = {:.6g}", b.F0, ratio);
        if (ratio < 1.0 - tol) r.outcome = Outcome::fail;
        break;
      }
      case TheoremId::T28: {
        double alpha = 0.0;
        r.bound_value = best_lower_bound(L0, params, wc, opts.lower_bound_alphas, &alpha);
        r.observed = traj.T_num;
        if (!std::isfinite(r.bound_value)) {
          r.hypotheses_met = false;
          r.clauses.push_back({"exponent regime admits an alpha", false});
          r.outcome = Outcome::inconclusive;
          r.detail = "no alpha in the admissible range satisfies the exponent conditions";
          break;
        }
        if (traj.verdict == Verdict::blowup) {
          r.margin = traj.T_num - r.bound_value;
          r.outcome = r.margin >= 0.0 ? Outcome::pass : Outcome::fail;
          r.detail = fmt::format("alpha = {:.6g}, T_lower = {:.6g}, T_num = {:.6g}", alpha,
                                 r.bound_value, traj.T_num);
        } else {
          // Without blow-up the lower bound cannot be contradicted.
          r.margin = std::nan("");
          r.outcome = Outcome::inconclusive;
          r.detail = fmt::format("alpha = {:.6g}, T_lower = {:.6g}, no blow-up observed", alpha,
                                 r.bound_value);
        }
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& c : r.clauses) clauses.push_back({{"clause", c.text}, {"holds", c.holds}});
  auto num = [](double x) -> nlohmann::json {
    if (std::isfinite(x)) return x;
    return nullptr;
  };
  nlohmann::json j{{"theorem_id", to_string(r.theorem)},
                   {"hypotheses_met", r.hypotheses_met},
                   {"clauses", clauses},
                   {"bound_value", num(r.bound_value)},
                   {"observed", num(r.observed)},
                   {"margin", num(r.margin)},
                   {"outcome", to_string(r.outcome)},
                   {"detail", r.detail}};
  if (r.theorem == TheoremId::T27) j["monitor_ratio"] = num(r.monitor_ratio);
  return j;
}

nlohmann::json to_json(const std::vector<BoundReport>& rs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return a;
}

std::string bound_table(const std::vector<BoundReport>& rs) {
  std::string out = fmt::format("{:<12} {:>14} {:>14} {:>14} {:<13}\n", "theorem", "bound",
                                "observed", "margin", "outcome");
  for (const auto& r : rs) {
    out += fmt::format("{:<12} {:>14.6g} {:>14.6g} {:>14.6g} {:<13}\n", to_string(r.theorem),
                       r.bound_value, r.observed, r.margin, to_string(r.outcome));
  }
  if (rs.empty()) out += "(no theorem applies to the initial data)\n";
  return out;
}

}  // namespace pwell
