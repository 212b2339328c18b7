#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pwell/grid.hpp"
#include "pwell/params.hpp"
#include "pwell/profiles.hpp"

namespace pwell {

struct AlphaSample {
  double alpha = 0.0;
  double B_alpha = 0.0;      // raw estimate
  double r_alpha = 0.0;      // from the safety-factored B_alpha
  double sigma_alpha = 0.0;  // from the safety-factored kappa_q
};

/// Estimated embedding constants and the well quantities derived from them.
///
/// B_alpha, kappa_q, C_star and C_hardy are raw estimates: maxima of
/// quotients over a trial family, hence lower bounds on the discrete optimal
/// constants. Everything downstream is computed from the constants multiplied
/// by safety_factor, which moves every derived quantity in the direction that
/// makes the theorem checks conservative (smaller radii and depths, larger
/// C_tilde).
struct WellConstants {
  double safety_factor = 1.25;
  double volume = 0.0;

  double alpha = 0.0;
  double B_alpha = 0.0;
  double kappa_q = 0.0;
  double C_star = 0.0;
  double C_hardy = 0.0;

  double C_tilde = 0.0;
  double r_alpha = 0.0;
  double sigma_alpha = 0.0;
  double r_star = 0.0;
  double r_sup = 0.0;
  double M_depth = 0.0;
  double d_alpha = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;

  std::vector<AlphaSample> alpha_table;

  double safe(double raw) const { return safety_factor * raw; }
};

struct ConstantsOptions {
  int alpha_samples = 32;
  int family_size = 16;
  double safety_factor = 1.25;
  double alpha_floor = 1e-3;
};

// Best quotient ||u||_target / ||grad u||_p over the trial family; the
// returned field is the maximizer.
SearchResult embedding_search(const std::shared_ptr<const RadialGrid>& grid, const Params& params,
                              double target_exponent, int family_size,
                              std::span<const ProfileShape> extra_seeds = {});

double estimate_embedding_constant(const std::shared_ptr<const RadialGrid>& grid,
                                   const Params& params, double target_exponent,
                                   int family_size,
                                   std::span<const ProfileShape> extra_seeds = {});

// (alpha / B^{q+alpha})^{1/(q+alpha-p)}
double r_alpha(double alpha, double B_alpha, const Params& params);

// (alpha / kappa^{q+alpha})^{1/(q+alpha-p)} |Omega|^{alpha/(q(q+alpha-p))}
double sigma_alpha(double alpha, double kappa_q, const Params& params, double volume);

// Uniform grid of alpha_samples points over [floor, Np/(N-p) - q].
std::vector<double> alpha_grid(const Params& params, int alpha_samples, double floor = 1e-3);

struct RStarResult {
  double r_star = 0.0;
  double best_alpha = 0.0;
  std::vector<AlphaSample> table;
};

// Maximizes r(alpha) over the given alphas with B_alpha estimated on the
// grid; the safety factor multiplies each B_alpha estimate. kappa_q (raw)
// feeds sigma(alpha) and contributes its maximizer as an extra seed.
RStarResult r_star_over(const std::shared_ptr<const RadialGrid>& grid, const Params& params,
                        std::span<const double> alphas, int family_size, double safety_factor,
                        double kappa_q, std::span<const ProfileShape> seeds = {});

RStarResult r_star(const Params& params, const std::shared_ptr<const RadialGrid>& grid,
                   int alpha_samples, int family_size = 16, double safety_factor = 1.0);

// C_tilde from the Hardy-Sobolev constant for the weighted L^2 instance.
double c_tilde(double C_hardy, const Params& params, double volume);

// Exponent of the gradient integral in the weighted L^2 Hardy-Sobolev
// instance: 2N/(N+2-s).
double hardy_gradient_exponent(const Params& params);

// [int |u|^gamma |x|^{-beta}] / [int |grad u|^n]^{(N-beta)/(N-n)},
// gamma = n(N-beta)/(N-n).
double hardy_sobolev_ratio(const RadialField& u, const Params& params, double beta, double n);

// Family maximum of hardy_sobolev_ratio for (beta, n) = (s, 2N/(N+2-s)),
// the instance where gamma = 2.
double estimate_hardy_constant(const std::shared_ptr<const RadialGrid>& grid,
                               const Params& params, int family_size);

WellConstants estimate_well_constants(const Params& params,
                                      const std::shared_ptr<const RadialGrid>& grid,
                                      const ConstantsOptions& options = {});

nlohmann::json to_json(const WellConstants& wc);

// Aligned text table: name, value, estimation method, safety factor.
std::string constants_table(const WellConstants& wc);

}  // namespace pwell
