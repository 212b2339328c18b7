#pragma once

#include "pwell/constants.hpp"
#include "pwell/params.hpp"

namespace pwell {

/// L-envelope for global solutions with J0 < d(alpha), evaluated with the
/// constants' alpha, r(alpha) and C_tilde. For p = 2 it is exponential, for
/// p > 2 algebraic; both equal L0 at t = 0. Throws HypothesisError unless
/// 0 <= J0 < d(alpha).
double decay_envelope(const Params& params, const WellConstants& wc, double L0, double J0,
                      double t);

// Same formula with explicit constants.
double decay_envelope(const Params& params, double alpha, double r_alpha, double C_tilde,
                      double L0, double J0, double t);

// Blow-up time upper bound for J0 < 0: 2 L0 / ((2 - q) q J0).
double blowup_bound_T25(double L0, double J0, double q);

// Blow-up time upper bound for J0 < M: 8 (q-1) L0 / ((q-2)^2 q (M - J0)).
double blowup_bound_T26(double L0, double J0, double M_depth, double q);

struct T27Bound {
  double F0 = 0.0;
  double bound = 0.0;
};

// Upper bound under 0 < C2 J0 < L0 - C1, with C1 = C_tilde/2 and
// C2 = pq/(q-p) C_tilde/2.
T27Bound blowup_bound_T27(double L0, double J0, const Params& params, double C_tilde);
T27Bound blowup_bound_T27(double L0, double J0, const Params& params, const WellConstants& wc);

/// Exponents of the blow-up lower bound for a chosen alpha:
///   theta = (1/2 - 1/(q+alpha)) / (1/2 - (N-p)/(Np))
///   kappa = [(1-theta)(q+alpha)/2] / [1 - theta(q+alpha)/p]
struct LowerBoundParams {
  double alpha = 0.0;
  double theta_exp = 0.0;
  double kappa_exp = 0.0;
  double diam = 0.0;

  static LowerBoundParams make(const Params& params, double alpha);
};

// True when q + alpha < p (1 + 2/N), the regime where kappa > 1.
bool lower_bound_regime(const Params& params, double alpha);

/// Blow-up time lower bound
///   L0^{1-kappa} / (alpha^{-1} [C*^{theta(q+a)} alpha^{-theta(q+a)/p}
///                   diam^{s(1-theta)(q+a)/2}]^{p/(p - theta(q+a))} 2^kappa (kappa-1))
/// Throws HypothesisError outside the regime.
double blowup_lower_bound_T28(double L0, const Params& params, double C_star,
                              const LowerBoundParams& lb);

}  // namespace pwell
