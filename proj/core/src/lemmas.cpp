#include "pwell/lemmas.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include <boost/numeric/odeint.hpp>

#include "pwell/constants.hpp"
#include "pwell/error.hpp"
#include "pwell/profiles.hpp"

namespace pwell {

double log_slack_upper(double s, double p, double mu) {
  if (s == 1.0) return 1.0;
  const double ls = std::log(s);
  // Both sides are positive for s > 1; compare logarithms to avoid overflow.
  const double log_lhs = p * ls + std::log(ls);
  const double log_rhs = -1.0 - std::log(mu) + (p + mu) * ls;
  return -std::expm1(log_lhs - log_rhs);
}

double log_slack_lower(double s, double p) {
  const double lhs = std::abs(std::pow(s, p) * std::log(s));
  const double rhs = 1.0 / (std::exp(1.0) * p);
  return (rhs - lhs) / rhs;
}

LogInequalityReport verify_log_inequalities(std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw ConfigError("verify_log_inequalities needs at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Exponents cover (0, 10]; s spans many decades on both sides of 1.
  auto exponent = [&] { return 10.0 * (1.0 - unit(rng)); };

  LogInequalityReport rep;
  rep.samples = samples;
  rep.min_slack_upper = std::numeric_limits<double>::infinity();
  rep.min_slack_lower = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 0; k < samples; ++k) {
    const double p = exponent();
    if (k % 2 == 0) {
      const double mu = exponent();
      const double s = std::exp(40.0 * unit(rng));
      const double slack = log_slack_upper(s, p, mu);
      rep.min_slack_upper = std::min(rep.min_slack_upper, slack);
      if (slack < 0.0) ++rep.violations;
    } else {
      const double s = unit(rng) < 0.5 ? unit(rng) : std::exp(-40.0 * unit(rng));
      if (!(s > 0.0) || !(s < 1.0)) continue;
      const double slack = log_slack_lower(s, p);
      rep.min_slack_lower = std::min(rep.min_slack_lower, slack);
      if (slack < 0.0) ++rep.violations;
    }
  }

  // Equality cases on a fixed small grid of exponents.
  for (double p : {0.5, 1.0, 2.0, 3.5}) {
    for (double mu : {0.25, 1.0, 2.0}) {
      const double s = std::exp(1.0 / mu);
      rep.equality_gap_upper = std::max(rep.equality_gap_upper, std::abs(log_slack_upper(s, p, mu)));
    }
    rep.equality_gap_lower =
        std::max(rep.equality_gap_lower, std::abs(log_slack_lower(std::exp(-1.0 / p), p)));
  }
  return rep;
}

ConcavityResult concavity_blowup_oracle(double theta, double psi0, double dpsi0) {
  if (!(theta > 0.0) || !(psi0 > 0.0) || !(dpsi0 > 0.0)) {
    throw DomainError("concavity oracle needs theta, psi0, psi0' > 0");
  }
  namespace ode = boost::numeric::odeint;
  using State = std::array<double, 2>;

  ConcavityResult out;
  out.t2 = psi0 / (theta * dpsi0);
  out.exact_blowup = out.t2;

  auto rhs = [theta](const State& x, State& dxdt, double) {
    dxdt[0] = x[1];
    dxdt[1] = (1.0 + theta) * x[1] * x[1] / x[0];
  };
  const double target = psi0 * std::pow(std::numeric_limits<double>::epsilon(), -0.25);

  auto stepper = ode::make_dense_output(1e-13, 1e-13, ode::runge_kutta_dopri5<State>());
  stepper.initialize(State{psi0, dpsi0}, 0.0, 1e-3 * out.t2);
  while (stepper.current_state()[0] <= target) {
    stepper.do_step(rhs);
    if (!std::isfinite(stepper.current_state()[0]) || stepper.current_time() > 10.0 * out.t2) {
      throw NumericalError("concavity oracle failed to reach the blow-up threshold");
    }
  }
  // Bisect the crossing inside the last step with the dense interpolant.
  double lo = stepper.previous_time();
  double hi = stepper.current_time();
  State x{};
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    stepper.calc_state(mid, x);
    (x[0] > target ? hi : lo) = mid;
  }
  out.observed_blowup = hi;
  return out;
}

HardySobolevReport verify_hardy_sobolev(const std::shared_ptr<const RadialGrid>& grid,
                                        const Params& params, int family_size,
                                        double safety_factor, int probes, std::uint64_t seed) {
  HardySobolevReport rep;
  rep.estimate = estimate_hardy_constant(grid, params, family_size);
  rep.probes = probes;
  const double n = hardy_gradient_exponent(params);

  // Probes are random positive mixtures of two random trial shapes.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto random_shape = [&] {
    ProfileShape sh;
    sh.a = std::exp(std::log(0.25) + unit(rng) * std::log(32.0));
    sh.b = std::exp(std::log(0.25) + unit(rng) * std::log(32.0));
    sh.c = std::exp(std::log(1e-3) + unit(rng) * std::log(1e3));
    sh.d = unit(rng) * std::max(0.25, 0.5 * (params.N - 2));
    return sh;
  };
  rep.max_probe = 0.0;
  for (int k = 0; k < probes; ++k) {
    const RadialField f = make_profile(grid, random_shape());
    const RadialField g = make_profile(grid, random_shape());
    const double w = unit(rng);
    std::vector<double> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = w * f[i] + (1.0 - w) * g[i];
    const RadialField u(grid, std::move(v));
    if (u.is_zero()) continue;
    rep.max_probe = std::max(rep.max_probe, hardy_sobolev_ratio(u, params, params.s, n));
  }
  rep.bounded = rep.max_probe <= safety_factor * rep.estimate;
  return rep;
}

nlohmann::json to_json(const LogInequalityReport& r) {
  return {{"samples", r.samples},
          {"violations", r.violations},
          {"min_slack_upper", r.min_slack_upper},
          {"min_slack_lower", r.min_slack_lower},
          {"equality_gap_upper", r.equality_gap_upper},
          {"equality_gap_lower", r.equality_gap_lower},
          {"passed", r.passed()}};
}

nlohmann::json to_json(const ConcavityResult& r) {
  return {{"t2", r.t2}, {"observed_blowup", r.observed_blowup}, {"exact_blowup", r.exact_blowup}};
}

nlohmann::json to_json(const HardySobolevReport& r) {
  return {{"estimate", r.estimate},
          {"max_probe", r.max_probe},
          {"probes", r.probes},
          {"bounded", r.bounded}};
}

}  // namespace pwell
