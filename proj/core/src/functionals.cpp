#include "pwell/functionals.hpp"

#include <cmath>

#include "pwell/quadrature.hpp"

namespace pwell {

double log_source_integral(const RadialField& u, double q) {
  const auto w = u.grid().volumes();
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double a = std::abs(u[i]);
    if (a == 0.0) continue;
    sum += w[i] * std::pow(a, q) * std::log(a);
  }
  return sum;
}

EnergyReport evaluate(const RadialField& u, const Params& params) {
  const double p = params.p;
  const double q = params.q;
  EnergyReport r;
  r.grad_p = grad_norm_p(u, p);
  r.lq_q = lq_norm_pow(u, q);
  r.log_term = log_source_integral(u, q);
  r.L = 0.5 * weighted_l2_sq(u, params.s);
  r.J = r.grad_p / p - r.log_term / q + r.lq_q / (q * q);
  r.I = r.grad_p - r.log_term;
  return r;
}

double decomposition_residual(const EnergyReport& report, const Params& params) {
  const double p = params.p;
  const double q = params.q;
  const double rhs = report.I / q + (q - p) / (p * q) * report.grad_p + report.lq_q / (q * q);
  return std::abs(report.J - rhs);
}

double fiber_nehari(const EnergyReport& report, const Params& params, double lambda) {
  const double lp = std::pow(lambda, params.p);
  const double lq = std::pow(lambda, params.q);
  return lp * report.grad_p - lq * report.log_term - lq * std::log(lambda) * report.lq_q;
}

double fiber_energy(const EnergyReport& report, const Params& params, double lambda) {
  const double p = params.p;
  const double q = params.q;
  const double lp = std::pow(lambda, p);
  const double lq = std::pow(lambda, q);
  const double log_term = lq * (report.log_term + std::log(lambda) * report.lq_q);
  return lp * report.grad_p / p - log_term / q + lq * report.lq_q / (q * q);
}

}  // namespace pwell
