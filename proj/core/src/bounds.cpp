#include "pwell/bounds.hpp"

#include <cmath>

#include <fmt/format.h>

#include "pwell/error.hpp"

namespace pwell {

double decay_envelope(const Params& params, double alpha, double r_alpha, double C_tilde,
                      double L0, double J0, double t) {
  const double p = params.p;
  const double q = params.q;
  const double d_alpha = (q - p) / (p * q) * std::pow(r_alpha, p);
  if (!(J0 >= 0.0) || !(J0 < d_alpha)) {
    throw HypothesisError(fmt::format(
        "decay envelope needs 0 <= J(u0) < d(alpha); got J(u0) = {}, d(alpha) = {}", J0, d_alpha));
  }
  if (!(C_tilde > 0.0)) throw DomainError("C_tilde must be positive");
  const double ratio = (p * q / (q - p)) * J0 / std::pow(r_alpha, p);
  const double bracket = 1.0 - std::pow(ratio, (q + alpha - p) / p);
  const double X0 = 2.0 * L0;
  if (p == 2.0) {
    return 0.5 * X0 * std::exp(-(2.0 / C_tilde) * bracket * t);
  }
  const double rate = (p / 2.0 - 1.0) * (2.0 / std::pow(C_tilde, p / 2.0)) * bracket;
  return 0.5 * std::pow(rate * t + std::pow(X0, 1.0 - p / 2.0), 2.0 / (2.0 - p));
}

double decay_envelope(const Params& params, const WellConstants& wc, double L0, double J0,
                      double t) {
  return decay_envelope(params, wc.alpha, wc.r_alpha, wc.C_tilde, L0, J0, t);
}

double blowup_bound_T25(double L0, double J0, double q) {
  if (!(J0 < 0.0)) throw HypothesisError(fmt::format("needs J(u0) < 0; got {}", J0));
  if (!(q > 2.0)) throw HypothesisError("needs q > 2");
  return 2.0 * L0 / ((2.0 - q) * q * J0);
}

double blowup_bound_T26(double L0, double J0, double M_depth, double q) {
  if (!(J0 < M_depth)) {
    throw HypothesisError(fmt::format("needs J(u0) < M; got J(u0) = {}, M = {}", J0, M_depth));
  }
  if (!(q > 2.0)) throw HypothesisError("needs q > 2");
  return 8.0 * (q - 1.0) * L0 / ((q - 2.0) * (q - 2.0) * q * (M_depth - J0));
}

T27Bound blowup_bound_T27(double L0, double J0, const Params& params, double C_tilde) {
  const double p = params.p;
  const double q = params.q;
  const double C1 = C_tilde / 2.0;
  const double C2 = (p * q / (q - p)) * (C_tilde / 2.0);
  if (!(C2 * J0 > 0.0)) {
    throw HypothesisError(fmt::format("needs 0 < C2 J(u0); got C2 J(u0) = {}", C2 * J0));
  }
  if (!(C2 * J0 < L0 - C1)) {
    throw HypothesisError(fmt::format("needs C2 J(u0) < L(0) - C1; got {} >= {}", C2 * J0,
                                      L0 - C1));
  }
  T27Bound out;
  out.F0 = L0 - C1 - C2 * J0;
  out.bound = 4.0 * (q - 1.0) * p * C_tilde * L0 / ((q - 2.0) * (q - 2.0) * (q - p) * out.F0);
  return out;
}

T27Bound blowup_bound_T27(double L0, double J0, const Params& params, const WellConstants& wc) {
  return blowup_bound_T27(L0, J0, params, wc.C_tilde);
}

LowerBoundParams LowerBoundParams::make(const Params& params, double alpha) {
  const double p = params.p;
  const double e = params.q + alpha;
  LowerBoundParams lb;
  lb.alpha = alpha;
  lb.theta_exp = (0.5 - 1.0 / e) / (0.5 - (params.N - p) / (params.N * p));
  lb.kappa_exp = ((1.0 - lb.theta_exp) * e / 2.0) / (1.0 - lb.theta_exp * e / p);
  lb.diam = 2.0 * params.R;
  return lb;
}

bool lower_bound_regime(const Params& params, double alpha) {
  return alpha > 0.0 && alpha <= params.alpha_max() &&
         params.q + alpha < params.p * (1.0 + 2.0 / params.N);
}

double blowup_lower_bound_T28(double L0, const Params& params, double C_star,
                              const LowerBoundParams& lb) {
  const double p = params.p;
  const double a = lb.alpha;
  const double e = params.q + a;
  if (!lower_bound_regime(params, a)) {
    throw HypothesisError(fmt::format("needs q + alpha < p(1 + 2/N); got {} >= {}", e,
                                      p * (1.0 + 2.0 / params.N)));
  }
  const double th = lb.theta_exp;
  const double ka = lb.kappa_exp;
  if (!(th > 0.0 && th < 1.0) || !(ka > 1.0)) {
    throw HypothesisError(fmt::format("exponents out of range: theta = {}, kappa = {}", th, ka));
  }
  const double inner = std::pow(C_star, th * e) * std::pow(a, -th * e / p) *
                       std::pow(lb.diam, params.s * (1.0 - th) * e / 2.0);
  const double denom = (1.0 / a) * std::pow(inner, p / (p - th * e)) * std::pow(2.0, ka) * (ka - 1.0);
  return std::pow(L0, 1.0 - ka) / denom;
}

}  // namespace pwell
