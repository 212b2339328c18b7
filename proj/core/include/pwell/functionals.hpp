#pragma once

#include "pwell/grid.hpp"
#include "pwell/params.hpp"

namespace pwell {

/// Energy, Nehari value and their constituent integrals for one snapshot.
///
///   J = grad_p/p - log_term/q + lq_q/q^2
///   I = grad_p - log_term
///   L = (1/2) int |x|^{-s} u^2
struct EnergyReport {
  double J = 0.0;
  double I = 0.0;
  double L = 0.0;
  double grad_p = 0.0;
  double lq_q = 0.0;
  double log_term = 0.0;
};

// int_Omega |u|^q ln|u| dx with the convention 0 ln 0 = 0.
double log_source_integral(const RadialField& u, double q);

EnergyReport evaluate(const RadialField& u, const Params& params);

// |J - (I/q + (q-p)/(pq) grad_p + lq_q/q^2)|
double decomposition_residual(const EnergyReport& report, const Params& params);

// I(lambda u) rebuilt from the report of u through the fibering map
//   lambda^p grad_p - lambda^q log_term - lambda^q ln(lambda) lq_q.
double fiber_nehari(const EnergyReport& report, const Params& params, double lambda);

// J(lambda u) rebuilt the same way.
double fiber_energy(const EnergyReport& report, const Params& params, double lambda);

}  // namespace pwell
