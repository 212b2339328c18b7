#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "pwell/functionals.hpp"
#include "pwell/grid.hpp"
#include "pwell/params.hpp"

namespace pwell {

/// Smallest positive root of
///   g(lambda) = lambda^p A - lambda^q B - lambda^q ln(lambda) C
/// with A = grad_p, B = log_term, C = lq_q. Throws ProjectionError when no
/// sign change is found on [1e-8, 1e8].
double fiber_root(double A, double B, double C, double p, double q);

// Scale lambda* with I(lambda* u) = 0.
double fiber_scale(const RadialField& u, const Params& params);

struct DEstimate {
  double value = 0.0;
  std::string label;
  RadialField field;  // minimizer, already on the Nehari manifold
};

struct DOptions {
  int family_size = 16;
  int descent_steps = 200;
  std::uint64_t seed = 0;
};

/// Upper bound on the mountain-pass level: the minimum of J over Nehari
/// projections of the trial family, refined by Nelder-Mead on the shape
/// parameters and a seeded random perturbation descent that re-projects after
/// every step. Nonincreasing in family_size.
DEstimate estimate_d(const std::shared_ptr<const RadialGrid>& grid, const Params& params,
                     const DOptions& options);

double estimate_d(const std::shared_ptr<const RadialGrid>& grid, const Params& params,
                  int family_size);

// The zero field is labelled inside_W.
enum class WellLabel { inside_W, inside_V, on_nehari, indeterminate };

const char* to_string(WellLabel label);

struct WellVerdict {
  WellLabel label = WellLabel::indeterminate;
  double J = 0.0;
  double I = 0.0;
  double d_ref = 0.0;
};

WellVerdict classify(const RadialField& u, const Params& params, double d_ref, double tol);

// Uses the default tolerance 1e-8 (1 + grad_p).
WellVerdict classify(const RadialField& u, const Params& params, double d_ref);

nlohmann::json to_json(const WellVerdict& v);

}  // namespace pwell
