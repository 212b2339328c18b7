#pragma once

#include <cstdint>
#include <memory>

#include <nlohmann/json.hpp>

#include "pwell/grid.hpp"
#include "pwell/params.hpp"

namespace pwell {

/// Outcome of a random sweep of the two logarithmic inequalities
///   s >= 1:     s^p ln s <= (e^{-1}/mu) s^{p+mu}
///   0 < s < 1:  |s^p ln s| <= 1/(e p)
/// Slack is measured relative to the right-hand side, so a value of 0 is
/// equality and a negative value is a violation.
struct LogInequalityReport {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  double min_slack_upper = 0.0;  // branch s >= 1
  double min_slack_lower = 0.0;  // branch 0 < s < 1
  double equality_gap_upper = 0.0;  // at s = e^{1/mu}
  double equality_gap_lower = 0.0;  // at s = e^{-1/p}

  bool passed(double equality_tol = 1e-12) const {
    return violations == 0 && equality_gap_upper <= equality_tol &&
           equality_gap_lower <= equality_tol;
  }
};

// Relative slack of each branch; exposed for the equality checks.
double log_slack_upper(double s, double p, double mu);
double log_slack_lower(double s, double p);

LogInequalityReport verify_log_inequalities(std::uint64_t samples, std::uint64_t seed);

struct ConcavityResult {
  double t2 = 0.0;                // psi0 / (theta psi0')
  double observed_blowup = 0.0;   // first time psi > psi0 eps^{-1/4}
  double exact_blowup = 0.0;      // t2 as well: the equality case blows up exactly there
};

/// Integrates psi'' psi = (1 + theta) psi'^2 with an adaptive Dormand-Prince
/// scheme and locates the time psi crosses psi0 / eps^{1/4}. The equality
/// case has the closed form psi = psi0 (1 - t/t2)^{-1/theta}.
ConcavityResult concavity_blowup_oracle(double theta, double psi0, double dpsi0);

struct HardySobolevReport {
  double estimate = 0.0;      // family maximum of the quotient
  double max_probe = 0.0;     // largest quotient over random probes
  int probes = 0;
  bool bounded = false;       // every probe below safety * estimate
};

/// Probes the weighted L^2 Hardy-Sobolev quotient on random smooth radial
/// fields and compares against the family estimate scaled by the safety
/// factor.
HardySobolevReport verify_hardy_sobolev(const std::shared_ptr<const RadialGrid>& grid,
                                        const Params& params, int family_size,
                                        double safety_factor, int probes, std::uint64_t seed);

nlohmann::json to_json(const LogInequalityReport& r);
nlohmann::json to_json(const ConcavityResult& r);
nlohmann::json to_json(const HardySobolevReport& r);

}  // namespace pwell
