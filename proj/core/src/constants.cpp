#include "pwell/constants.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include <fmt/format.h>

#include "pwell/error.hpp"
#include "pwell/quadrature.hpp"

namespace pwell {

SearchResult embedding_search(const std::shared_ptr<const RadialGrid>& grid, const Params& params,
                              double target_exponent, int family_size,
                              std::span<const ProfileShape> extra_seeds) {
  const double p = params.p;
  const double crit = params.critical_exponent();
  if (!(target_exponent >= p) || !(target_exponent <= crit * (1.0 + 1e-12))) {
    throw ConfigError(fmt::format("embedding target {} outside [p, Np/(N-p)] = [{}, {}]",
                                  target_exponent, p, crit));
  }
  auto quotient = [&](const RadialField& u) {
    const double g = grad_norm_p(u, p);
    if (!(g > 0.0)) return std::nan("");
    return lq_norm(u, target_exponent) / std::pow(g, 1.0 / p);
  };
  SearchOptions opts;
  opts.family_size = family_size;
  return search_family(grid, quotient, Extremum::maximize, opts, extra_seeds);
}

double estimate_embedding_constant(const std::shared_ptr<const RadialGrid>& grid,
                                   const Params& params, double target_exponent,
                                   int family_size, std::span<const ProfileShape> extra_seeds) {
  return embedding_search(grid, params, target_exponent, family_size, extra_seeds).value;
}

namespace {

void check_alpha(double alpha, const Params& params) {
  if (!(alpha > 0.0) || !(alpha <= params.alpha_max() * (1.0 + 1e-12))) {
    throw DomainError(fmt::format("alpha = {} outside (0, Np/(N-p) - q] = (0, {}]", alpha,
                                  params.alpha_max()));
  }
}

}  // namespace

double r_alpha(double alpha, double B_alpha, const Params& params) {
  check_alpha(alpha, params);
  if (!(B_alpha > 0.0)) throw DomainError("embedding constant must be positive");
  const double e = params.q + alpha;
  return std::pow(alpha / std::pow(B_alpha, e), 1.0 / (e - params.p));
}

double sigma_alpha(double alpha, double kappa_q, const Params& params, double volume) {
  check_alpha(alpha, params);
  if (!(kappa_q > 0.0)) throw DomainError("embedding constant must be positive");
  if (!(volume > 0.0)) throw DomainError("domain volume must be positive");
  const double q = params.q;
  const double e = q + alpha;
  return std::pow(alpha / std::pow(kappa_q, e), 1.0 / (e - params.p)) *
         std::pow(volume, alpha / (q * (e - params.p)));
}

std::vector<double> alpha_grid(const Params& params, int alpha_samples, double floor) {
  const double top = params.alpha_max();
  std::vector<double> out;
  if (alpha_samples <= 0) return out;
  if (alpha_samples == 1) return {top};
  const double lo = std::min(floor, 0.5 * top);
  for (int k = 0; k < alpha_samples; ++k) {
    out.push_back(lo + (top - lo) * k / (alpha_samples - 1));
  }
  return out;
}

RStarResult r_star_over(const std::shared_ptr<const RadialGrid>& grid, const Params& params,
                        std::span<const double> alphas, int family_size, double safety_factor,
                        double kappa_q, std::span<const ProfileShape> seeds) {
  if (alphas.empty()) throw ConfigError("r_star needs at least one alpha sample");
  const double volume = grid->total_volume();
  std::vector<std::future<double>> jobs;
  jobs.reserve(alphas.size());
  for (double alpha : alphas) {
    check_alpha(alpha, params);
    jobs.push_back(std::async(std::launch::async, [&, alpha] {
      return estimate_embedding_constant(grid, params, params.q + alpha, family_size, seeds);
    }));
  }
  RStarResult out;
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    AlphaSample a;
    a.alpha = alphas[k];
    a.B_alpha = jobs[k].get();
    a.r_alpha = r_alpha(a.alpha, safety_factor * a.B_alpha, params);
    a.sigma_alpha =
        kappa_q > 0.0 ? sigma_alpha(a.alpha, safety_factor * kappa_q, params, volume) : 0.0;
    if (k == 0 || a.r_alpha > out.r_star) {
      out.r_star = a.r_alpha;
      out.best_alpha = a.alpha;
    }
    out.table.push_back(a);
  }
  return out;
}

RStarResult r_star(const Params& params, const std::shared_ptr<const RadialGrid>& grid,
                   int alpha_samples, int family_size, double safety_factor) {
  if (alpha_samples < 3) throw ConfigError("r_star needs at least 3 alpha samples");
  const SearchResult kappa = embedding_search(grid, params, params.q, family_size);
  std::vector<ProfileShape> seeds;
  if (kappa.shape) seeds.push_back(*kappa.shape);
  const std::vector<double> alphas = alpha_grid(params, alpha_samples);
  return r_star_over(grid, params, alphas, family_size, safety_factor, kappa.value, seeds);
}

double hardy_gradient_exponent(const Params& params) {
  return 2.0 * params.N / (params.N + 2.0 - params.s);
}

double c_tilde(double C_hardy, const Params& params, double volume) {
  if (!(C_hardy > 0.0)) throw DomainError("Hardy-Sobolev constant must be positive");
  const double n = hardy_gradient_exponent(params);
  const double p = params.p;
  if (n > p * (1.0 + 1e-12)) {
    throw HypothesisError(fmt::format(
        "2N/(N+2-s) = {} exceeds p = {}; the weighted L^2 estimate does not apply", n, p));
  }
  if (std::abs(n - p) <= 1e-12 * p) return C_hardy;
  return C_hardy * std::pow(volume, (params.N + 2.0 - params.s) / params.N - 2.0 / p);
}

double hardy_sobolev_ratio(const RadialField& u, const Params& params, double beta, double n) {
  const double N = params.N;
  if (!(n > 1.0) || !(n < N)) throw DomainError("Hardy-Sobolev ratio needs 1 < n < N");
  if (!(beta >= 0.0) || !(beta <= n)) throw DomainError("Hardy-Sobolev ratio needs 0 <= beta <= n");
  if (u.is_zero()) throw DomainError("Hardy-Sobolev ratio is undefined for the zero field");
  const double gamma = n * (N - beta) / (N - n);
  const double num = weighted_lq_pow(u, gamma, beta);
  const double den = std::pow(grad_norm_p(u, n), (N - beta) / (N - n));
  return num / den;
}

double estimate_hardy_constant(const std::shared_ptr<const RadialGrid>& grid,
                               const Params& params, int family_size) {
  const double n = hardy_gradient_exponent(params);
  auto ratio = [&](const RadialField& u) {
    if (u.is_zero()) return std::nan("");
    return hardy_sobolev_ratio(u, params, params.s, n);
  };
  SearchOptions opts;
  opts.family_size = family_size;
  return search_family(grid, ratio, Extremum::maximize, opts).value;
}

WellConstants estimate_well_constants(const Params& params,
                                      const std::shared_ptr<const RadialGrid>& grid,
                                      const ConstantsOptions& options) {
  params.validate();
  if (!(options.safety_factor >= 1.0)) throw ConfigError("safety factor must be >= 1");
  WellConstants wc;
  wc.safety_factor = options.safety_factor;
  wc.volume = grid->total_volume();

  const SearchResult kappa = embedding_search(grid, params, params.q, options.family_size);
  wc.kappa_q = kappa.value;
  std::vector<ProfileShape> seeds;
  if (kappa.shape) seeds.push_back(*kappa.shape);

  if (options.alpha_samples < 1) throw ConfigError("need at least one alpha sample");
  const std::vector<double> alphas =
      alpha_grid(params, options.alpha_samples, options.alpha_floor);
  RStarResult rs = r_star_over(grid, params, alphas, options.family_size, wc.safety_factor,
                               wc.kappa_q, seeds);
  wc.alpha_table = std::move(rs.table);
  wc.alpha = rs.best_alpha;
  wc.r_star = rs.r_star;
  for (const auto& a : wc.alpha_table) {
    wc.r_sup = std::max(wc.r_sup, a.sigma_alpha);
    if (a.alpha == wc.alpha) {
      wc.B_alpha = a.B_alpha;
      wc.r_alpha = a.r_alpha;
      wc.sigma_alpha = a.sigma_alpha;
    }
  }

  wc.C_star = estimate_embedding_constant(grid, params, params.critical_exponent(),
                                          options.family_size);
  wc.C_hardy = estimate_hardy_constant(grid, params, options.family_size);
  wc.C_tilde = c_tilde(wc.safe(wc.C_hardy), params, wc.volume);

  const double p = params.p;
  const double q = params.q;
  const double depth = (q - p) / (p * q);
  wc.M_depth = depth * std::pow(wc.r_star, p);
  wc.d_alpha = depth * std::pow(wc.r_alpha, p);
  wc.C1 = wc.C_tilde / 2.0;
  wc.C2 = (p * q / (q - p)) * (wc.C_tilde / 2.0);
  return wc;
}

nlohmann::json to_json(const WellConstants& wc) {
  nlohmann::json j;
  j["safety_factor"] = wc.safety_factor;
  j["volume"] = wc.volume;
  j["alpha"] = wc.alpha;
  j["B_alpha"] = wc.B_alpha;
  j["kappa_q"] = wc.kappa_q;
  j["C_star"] = wc.C_star;
  j["C_hardy"] = wc.C_hardy;
  j["C_tilde"] = wc.C_tilde;
  j["r_alpha"] = wc.r_alpha;
  j["sigma_alpha"] = wc.sigma_alpha;
  j["r_star"] = wc.r_star;
  j["r_sup"] = wc.r_sup;
  j["M_depth"] = wc.M_depth;
  j["d_alpha"] = wc.d_alpha;
  j["C1"] = wc.C1;
  j["C2"] = wc.C2;
  auto& table = j["alpha_table"] = nlohmann::json::array();
  for (const auto& a : wc.alpha_table) {
    table.push_back({{"alpha", a.alpha},
                     {"B_alpha", a.B_alpha},
                     {"r_alpha", a.r_alpha},
                     {"sigma_alpha", a.sigma_alpha}});
  }
  return j;
}

std::string constants_table(const WellConstants& wc) {
  struct Row {
    const char* name;
    double value;
    const char* method;
    double factor;
  };
  const double sf = wc.safety_factor;
  const Row rows[] = {
      {"alpha", wc.alpha, "argmax of r(alpha) over the alpha grid", 1.0},
      {"B_alpha", wc.B_alpha, "family max of ||u||_{q+alpha}/||grad u||_p", 1.0},
      {"kappa_q", wc.kappa_q, "family max of ||u||_q/||grad u||_p", 1.0},
      {"C_star", wc.C_star, "family max of ||u||_{Np/(N-p)}/||grad u||_p", 1.0},
      {"C_hardy", wc.C_hardy, "family max of weighted L^2 Hardy-Sobolev ratio", 1.0},
      {"C_tilde", wc.C_tilde, "closed form from safety-factored C_hardy", sf},
      {"r_alpha", wc.r_alpha, "closed form from safety-factored B_alpha", sf},
      {"sigma_alpha", wc.sigma_alpha, "closed form from safety-factored kappa_q", sf},
      {"r_star", wc.r_star, "max of r(alpha) over the alpha grid", sf},
      {"r_sup", wc.r_sup, "max of sigma(alpha) over the alpha grid", sf},
      {"M_depth", wc.M_depth, "(q-p)/(pq) r_star^p", sf},
      {"d_alpha", wc.d_alpha, "(q-p)/(pq) r_alpha^p", sf},
      {"C1", wc.C1, "C_tilde/2", sf},
      {"C2", wc.C2, "pq/(q-p) C_tilde/2", sf},
      {"volume", wc.volume, "exact shell volumes", 1.0},
  };
  std::string out = fmt::format("{:<12} {:>24}  {:<6}  {}\n", "constant", "value", "safety",
                                "method");
  for (const auto& r : rows) {
    out += fmt::format("{:<12} {:>24.17g}  {:<6.3g}  {}\n", r.name, r.value, r.factor, r.method);
  }
  return out;
}

}  // namespace pwell
