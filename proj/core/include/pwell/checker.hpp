#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pwell/bounds.hpp"
#include "pwell/constants.hpp"
#include "pwell/evolution.hpp"
#include "pwell/params.hpp"

namespace pwell {

enum class TheoremId { T23_decay, T25, T26, T27, T28 };
enum class Outcome { pass, fail, inconclusive };

const char* to_string(TheoremId id);
const char* to_string(Outcome o);

struct Clause {
  std::string text;
  bool holds = false;
};

/// Evidence for one theorem on one trajectory. For the blow-up theorems
/// bound_value is a time and observed is T_num; for the decay envelope they
/// are the envelope and L at the last sample, and `envelope` holds every
/// sample. margin is signed: negative means the check failed.
struct BoundReport {
  TheoremId theorem = TheoremId::T25;
  bool hypotheses_met = false;
  std::vector<Clause> clauses;
  double bound_value = 0.0;
  double observed = 0.0;
  double margin = 0.0;
  Outcome outcome = Outcome::inconclusive;
  std::string detail;
  std::vector<double> envelope;
  // F(t_k) / (F(0) exp(((q-p)/p)(2/C_tilde) t_k)) minimum over samples; T2.7 only.
  double monitor_ratio = 0.0;
};

struct CheckOptions {
  double tolerance = 0.1;  // relative slack on every bound comparison
  int lower_bound_alphas = 64;
};

// Hypothesis clauses of every theorem for the initial data, in the order
// T2.3 decay, T2.5, T2.6, T2.7, T2.8.
std::vector<BoundReport> evaluate_hypotheses(const EnergyReport& initial, const Params& params,
                                             const WellConstants& wc);

/// Largest lower bound over alpha on a uniform grid of the regime
/// q + alpha < p (1 + 2/N), using the safety-factored C*. Returns the bound
/// and writes the maximizing alpha. NaN when the regime is empty.
double best_lower_bound(double L0, const Params& params, const WellConstants& wc, int alphas,
                        double* best_alpha = nullptr);

/// Applies every theorem whose hypotheses the initial sample satisfies.
/// Upper bounds use the safety-factored C_tilde and the lower bound the
/// safety-factored C*, so estimation error can only loosen a check. Failures
/// are recorded in the reports, never thrown.
std::vector<BoundReport> check_trajectory(const Trajectory& traj, const Params& params,
                                          const WellConstants& wc, const CheckOptions& opts = {});

nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const std::vector<BoundReport>& rs);

std::string bound_table(const std::vector<BoundReport>& rs);

}  // namespace pwell
