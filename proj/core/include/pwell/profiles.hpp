#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pwell/grid.hpp"

namespace pwell {

/// Radial trial shape  u(rho) = (1 - rho^a)^b (rho + c)^{-d},  rho = r/R.
///
/// (a, b, c, d) = (1, beta, 1, 0) is the distance-to-boundary power
/// (1 - r/R)^beta, (2, k, 1, 0) is the bump (1 - rho^2)^k, and d > 0 with
/// small c concentrates mass near the origin.
struct ProfileShape {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  double d = 0.0;

  double operator()(double rho) const;
};

RadialField make_profile(std::shared_ptr<const RadialGrid> grid, const ProfileShape& shape,
                         double amplitude = 1.0);

// First radial Dirichlet eigenfunction of the Laplacian on the ball,
// normalized to amplitude at the origin.
RadialField eigen_profile(std::shared_ptr<const RadialGrid> grid, double amplitude = 1.0);

// First Dirichlet eigenvalue of the Laplacian on the ball of radius R in R^N.
double first_dirichlet_eigenvalue(int N, double R);

struct TrialMember {
  std::string label;
  std::optional<ProfileShape> shape;  // empty for the eigen seed
  RadialField field;
};

// Deterministic trial family. Member 0 is the eigen seed; the rest cycle
// through power, bump and concentrating shapes with parameters placed by a
// van der Corput sequence, so the family of size n is a prefix of the family
// of size m > n.
std::vector<TrialMember> trial_family(std::shared_ptr<const RadialGrid> grid, int family_size);

enum class Extremum { maximize, minimize };

struct SearchOptions {
  int family_size = 16;
  bool refine = true;
  int max_iterations = 400;
};

struct SearchResult {
  double value = 0.0;
  std::string label;
  std::optional<ProfileShape> shape;
  RadialField field;
  int evaluations = 0;
};

// Optional second stage run on every refined record; receives the record's
// value and field plus its position in the record sequence.
using Polish = std::function<std::pair<double, RadialField>(double, RadialField, int)>;

/// Extremizes `objective` over extra seeds followed by the trial family, then
/// refines each record holder (every member that improved on all earlier
/// members) with Nelder-Mead over its shape parameters. Because the family
/// of size n is a prefix of larger families, the result is monotone in
/// family_size. Objective values that are not finite are skipped. Throws
/// EstimationError if no member yields a finite value.
SearchResult search_family(std::shared_ptr<const RadialGrid> grid,
                           const std::function<double(const RadialField&)>& objective,
                           Extremum direction, const SearchOptions& options,
                           std::span<const ProfileShape> extra_seeds = {},
                           const Polish& polish = {});

}  // namespace pwell
