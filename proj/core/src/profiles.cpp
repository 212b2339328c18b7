#include "pwell/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/bessel.hpp>
#include <fmt/format.h>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "pwell/error.hpp"

namespace pwell {

double ProfileShape::operator()(double rho) const {
  const double base = 1.0 - std::pow(rho, a);
  if (base <= 0.0) return 0.0;
  return std::pow(base, b) * std::pow(rho + c, -d);
}

RadialField make_profile(std::shared_ptr<const RadialGrid> grid, const ProfileShape& shape,
                         double amplitude) {
  const double R = grid->radius();
  return RadialField::sample(std::move(grid),
                             [&](double r) { return amplitude * shape(r / R); });
}

double first_dirichlet_eigenvalue(int N, double R) {
  const double nu = 0.5 * N - 1.0;
  const double j = boost::math::cyl_bessel_j_zero(nu, 1);
  return j * j / (R * R);
}

RadialField eigen_profile(std::shared_ptr<const RadialGrid> grid, double amplitude) {
  const double nu = 0.5 * grid->dimension() - 1.0;
  const double k = boost::math::cyl_bessel_j_zero(nu, 1) / grid->radius();
  // (kr)^{-nu} J_nu(kr) -> 1 / (2^nu Gamma(nu+1)) at the origin.
  const double norm = std::pow(2.0, nu) * std::tgamma(nu + 1.0);
  return RadialField::sample(std::move(grid), [&](double r) {
    const double x = k * r;
    return amplitude * norm * std::pow(x, -nu) * boost::math::cyl_bessel_j(nu, x);
  });
}

namespace {

double van_der_corput(unsigned n) {
  double v = 0.0;
  double denom = 1.0;
  while (n != 0) {
    denom *= 2.0;
    v += (n & 1u) / denom;
    n >>= 1u;
  }
  return v;
}

ProfileShape family_shape(int j, int N) {
  const double x = van_der_corput(static_cast<unsigned>(j / 3 + 1));
  const double beta = std::exp(std::log(0.25) + x * std::log(32.0));
  switch (j % 3) {
    case 0:
      return {1.0, beta, 1.0, 0.0};
    case 1:
      return {2.0, beta, 1.0, 0.0};
    default: {
      const double c = std::exp(std::log(1e-3) + x * std::log(1e3));
      return {1.0, 2.0, c, std::max(0.25, 0.5 * (N - 2))};
    }
  }
}

std::string shape_label(const ProfileShape& s) {
  return fmt::format("shape(a={:.4g},b={:.4g},c={:.4g},d={:.4g})", s.a, s.b, s.c, s.d);
}

// Unconstrained coordinates (ln a, ln b, ln c, d) mapped back into a box.
ProfileShape from_coords(const gsl_vector* x, int N) {
  auto clamp = [](double v, double lo, double hi) { return std::clamp(v, lo, hi); };
  return {clamp(std::exp(gsl_vector_get(x, 0)), 0.05, 50.0),
          clamp(std::exp(gsl_vector_get(x, 1)), 0.05, 50.0),
          clamp(std::exp(gsl_vector_get(x, 2)), 1e-6, 10.0),
          clamp(gsl_vector_get(x, 3), 0.0, static_cast<double>(N))};
}

struct NmContext {
  std::shared_ptr<const RadialGrid> grid;
  const std::function<double(const RadialField&)>* objective;
  double sign;
  int evaluations;
};

double nm_cost(const gsl_vector* x, void* raw) {
  auto* ctx = static_cast<NmContext*>(raw);
  const ProfileShape shape = from_coords(x, ctx->grid->dimension());
  ++ctx->evaluations;
  const double v = (*ctx->objective)(make_profile(ctx->grid, shape));
  if (!std::isfinite(v)) return std::numeric_limits<double>::max();
  return ctx->sign * v;
}

struct Refined {
  double value;
  ProfileShape shape;
  int evaluations;
};

Refined nelder_mead(const std::shared_ptr<const RadialGrid>& grid,
                    const std::function<double(const RadialField&)>& objective, double sign,
                    const ProfileShape& start, double start_value, int max_iterations) {
  NmContext ctx{grid, &objective, sign, 0};
  gsl_multimin_function fn{&nm_cost, 4, &ctx};

  gsl_vector* x = gsl_vector_alloc(4);
  gsl_vector_set(x, 0, std::log(start.a));
  gsl_vector_set(x, 1, std::log(start.b));
  gsl_vector_set(x, 2, std::log(start.c));
  gsl_vector_set(x, 3, start.d);
  gsl_vector* step = gsl_vector_alloc(4);
  gsl_vector_set_all(step, 0.3);

  gsl_multimin_fminimizer* nm =
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 4);
  gsl_multimin_fminimizer_set(nm, &fn, x, step);
  for (int it = 0; it < max_iterations; ++it) {
    if (gsl_multimin_fminimizer_iterate(nm) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(nm), 1e-6) == GSL_SUCCESS) break;
  }
  Refined out{sign * gsl_multimin_fminimizer_minimum(nm),
              from_coords(gsl_multimin_fminimizer_x(nm), grid->dimension()), ctx.evaluations};
  gsl_multimin_fminimizer_free(nm);
  gsl_vector_free(step);
  gsl_vector_free(x);

  // The simplex never returns something worse than its best vertex, but the
  // start point itself is not necessarily a vertex after the first move.
  if (sign * out.value > sign * start_value) {
    out.value = start_value;
    out.shape = start;
  }
  return out;
}

}  // namespace

std::vector<TrialMember> trial_family(std::shared_ptr<const RadialGrid> grid, int family_size) {
  std::vector<TrialMember> out;
  if (family_size <= 0) return out;
  out.push_back({"eigen", std::nullopt, eigen_profile(grid)});
  for (int j = 0; static_cast<int>(out.size()) < family_size; ++j) {
    const ProfileShape s = family_shape(j, grid->dimension());
    out.push_back({shape_label(s), s, make_profile(grid, s)});
  }
  return out;
}

SearchResult search_family(std::shared_ptr<const RadialGrid> grid,
                           const std::function<double(const RadialField&)>& objective,
                           Extremum direction, const SearchOptions& options,
                           std::span<const ProfileShape> extra_seeds, const Polish& polish) {
  gsl_set_error_handler_off();
  const double sign = direction == Extremum::maximize ? -1.0 : 1.0;
  auto better = [&](double a, double b) { return sign * a < sign * b; };

  std::vector<TrialMember> members;
  for (const auto& s : extra_seeds) {
    members.push_back({"seed:" + shape_label(s), s, make_profile(grid, s)});
  }
  for (auto& m : trial_family(grid, options.family_size)) members.push_back(std::move(m));

  SearchResult best;
  bool found = false;
  std::vector<std::size_t> records;
  std::vector<double> record_values;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const double v = objective(members[k].field);
    ++best.evaluations;
    if (!std::isfinite(v)) continue;
    if (!found || better(v, best.value)) {
      found = true;
      best.value = v;
      best.label = members[k].label;
      best.shape = members[k].shape;
      best.field = members[k].field;
      records.push_back(k);
      record_values.push_back(v);
    }
  }
  if (!found) throw EstimationError("no trial profile produced a finite objective value");

  auto consider = [&](double value, const std::string& label,
                      const std::optional<ProfileShape>& shape, const RadialField& field) {
    if (std::isfinite(value) && better(value, best.value)) {
      best.value = value;
      best.label = label;
      best.shape = shape;
      best.field = field;
    }
  };
  for (std::size_t r = 0; r < records.size(); ++r) {
    const TrialMember& m = members[records[r]];
    double value = record_values[r];
    RadialField field = m.field;
    std::string label = m.label;
    if (options.refine && m.shape) {
      const Refined ref =
          nelder_mead(grid, objective, sign, *m.shape, value, options.max_iterations);
      best.evaluations += ref.evaluations;
      value = ref.value;
      field = make_profile(grid, ref.shape);
      label = "refined:" + shape_label(ref.shape);
      consider(value, label, ref.shape, field);
    }
    if (polish) {
      auto [pv, pf] = polish(value, std::move(field), static_cast<int>(r));
      consider(pv, label + "+polished", std::nullopt, pf);
    }
  }
  return best;
}

}  // namespace pwell
