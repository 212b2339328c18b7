#include "pwell/nehari.hpp"

#include <cmath>
#include <random>

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "pwell/error.hpp"
#include "pwell/profiles.hpp"

namespace pwell {

double fiber_root(double A, double B, double C, double p, double q) {
  // g(lambda)/lambda^p keeps the scan free of under/overflow.
  auto h = [&](double lambda) { return A - std::pow(lambda, q - p) * (B + C * std::log(lambda)); };
  double lo = 1e-8;
  if (!(h(lo) > 0.0)) {
    throw ProjectionError("fibering map is not positive near the origin (zero gradient?)");
  }
  constexpr double kGrowth = 1.25;
  double hi = lo;
  bool bracketed = false;
  while (hi < 1e8) {
    const double next = std::min(hi * kGrowth, 1e8);
    if (!(h(next) > 0.0)) {
      lo = hi;
      hi = next;
      bracketed = true;
      break;
    }
    hi = next;
  }
  if (!bracketed) throw ProjectionError("no sign change of the fibering map on [1e-8, 1e8]");
  if (h(hi) == 0.0) return hi;
  auto [a, b] = boost::math::tools::bisect(h, lo, hi,
                                           boost::math::tools::eps_tolerance<double>(52));
  // Return the endpoint where g is still nonnegative or closest to zero.
  return std::abs(h(a)) <= std::abs(h(b)) ? a : b;
}

double fiber_scale(const RadialField& u, const Params& params) {
  if (u.is_zero()) throw ProjectionError("cannot project the zero field");
  const EnergyReport r = evaluate(u, params);
  if (!(r.lq_q > 0.0)) throw ProjectionError("field has zero L^q norm");
  return fiber_root(r.grad_p, r.log_term, r.lq_q, params.p, params.q);
}

namespace {

// J at the Nehari projection of u, or NaN if the projection fails.
double projected_energy(const RadialField& u, const Params& params) {
  if (u.is_zero() || !u.is_finite()) return std::nan("");
  const EnergyReport r = evaluate(u, params);
  if (!(r.lq_q > 0.0) || !(r.grad_p > 0.0)) return std::nan("");
  try {
    const double lambda = fiber_root(r.grad_p, r.log_term, r.lq_q, params.p, params.q);
    return fiber_energy(r, params, lambda);
  } catch (const ProjectionError&) {
    return std::nan("");
  }
}

// Random smooth bumps added to the field, kept if the projected energy drops.
std::pair<double, RadialField> perturbation_descent(double value, RadialField u,
                                                    const Params& params, int steps,
                                                    std::uint64_t seed) {
  if (!std::isfinite(value) || steps <= 0) return {value, std::move(u)};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const RadialGrid& g = u.grid();
  const double R = g.radius();
  const double h = g.width();
  double sigma = 0.1 * u.max_abs();
  for (int k = 0; k < steps; ++k) {
    const double center = R * unit(rng);
    const double width = 2.0 * h + (0.5 * R - 2.0 * h) * unit(rng);
    const double amp = sigma * gauss(rng);
    RadialField trial = u;
    const auto r = g.centers();
    for (std::size_t i = 0; i < trial.size(); ++i) {
      const double z = (r[i] - center) / width;
      trial[i] += amp * std::exp(-z * z);
    }
    const double v = projected_energy(trial, params);
    if (std::isfinite(v) && v < value) {
      value = v;
      u = std::move(trial);
      sigma *= 1.2;
    } else {
      sigma *= 0.95;
    }
  }
  return {value, std::move(u)};
}

}  // namespace

DEstimate estimate_d(const std::shared_ptr<const RadialGrid>& grid, const Params& params,
                     const DOptions& options) {
  if (options.family_size < 1) throw ConfigError("family_size must be >= 1");
  auto objective = [&](const RadialField& u) { return projected_energy(u, params); };
  Polish polish = [&](double value, RadialField u, int record) {
    return perturbation_descent(value, std::move(u), params, options.descent_steps,
                                options.seed * 0x9E3779B97F4A7C15ull + record);
  };
  SearchOptions opts;
  opts.family_size = options.family_size;
  SearchResult best;
  try {
    best = search_family(grid, objective, Extremum::minimize, opts, {}, polish);
  } catch (const EstimationError&) {
    throw EstimationError("Nehari projection failed for every trial profile");
  }
  DEstimate out;
  out.value = best.value;
  out.label = best.label;
  out.field = best.field.scaled(fiber_scale(best.field, params));
  return out;
}

double estimate_d(const std::shared_ptr<const RadialGrid>& grid, const Params& params,
                  int family_size) {
  DOptions opts;
  opts.family_size = family_size;
  return estimate_d(grid, params, opts).value;
}

const char* to_string(WellLabel label) {
  switch (label) {
    case WellLabel::inside_W:
      return "inside_W";
    case WellLabel::inside_V:
      return "inside_V";
    case WellLabel::on_nehari:
      return "on_nehari";
    case WellLabel::indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

WellVerdict classify(const RadialField& u, const Params& params, double d_ref, double tol) {
  if (!(d_ref > 0.0)) throw DomainError("classification needs d_ref > 0");
  if (!(tol > 0.0)) throw DomainError("classification needs tol > 0");
  const EnergyReport r = evaluate(u, params);
  WellVerdict v;
  v.J = r.J;
  v.I = r.I;
  v.d_ref = d_ref;
  if (u.is_zero()) {
    // The zero field belongs to W.
    v.label = WellLabel::inside_W;
  } else if (std::abs(r.I) <= tol) {
    v.label = WellLabel::on_nehari;
  } else if (!(r.J < d_ref)) {
    v.label = WellLabel::indeterminate;
  } else if (r.I > tol) {
    v.label = WellLabel::inside_W;
  } else {
    v.label = WellLabel::inside_V;
  }
  return v;
}

WellVerdict classify(const RadialField& u, const Params& params, double d_ref) {
  const double tol = 1e-8 * (1.0 + evaluate(u, params).grad_p);
  return classify(u, params, d_ref, tol);
}

nlohmann::json to_json(const WellVerdict& v) {
  return {{"label", to_string(v.label)}, {"J", v.J}, {"I", v.I}, {"d_ref", v.d_ref}};
}

}  // namespace pwell
