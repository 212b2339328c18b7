#include "pwell/quadrature.hpp"

#include <cmath>

#include "pwell/error.hpp"

namespace pwell {

namespace {

double abs_pow(double x, double e) { return x == 0.0 ? 0.0 : std::pow(std::abs(x), e); }

}  // namespace

double weighted_l2_sq(const RadialField& u, double s) {
  const RadialGrid& g = u.grid();
  const std::vector<double> other = s == g.weight_exponent() ? std::vector<double>{}
                                                             : g.weighted_volumes(s);
  const auto m = other.empty() ? g.singular_volumes() : std::span<const double>(other);
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += m[i] * u[i] * u[i];
  return sum;
}

double grad_norm_p(const RadialField& u, double p) {
  const RadialGrid& g = u.grid();
  const auto a = g.face_weights();
  const int M = g.cells();
  double sum = 0.0;
  for (int f = 1; f < M; ++f) {
    sum += a[f - 1] * abs_pow((u[f] - u[f - 1]) / g.face_spacing(f), p);
  }
  sum += a[M - 1] * abs_pow(u[M - 1] / g.face_spacing(M), p);
  return sum;
}

double lq_norm_pow(const RadialField& u, double exponent) {
  const auto w = u.grid().volumes();
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += w[i] * abs_pow(u[i], exponent);
  return sum;
}

double lq_norm(const RadialField& u, double exponent) {
  if (!(exponent >= 1.0)) throw DomainError("norm exponent must be >= 1");
  return std::pow(lq_norm_pow(u, exponent), 1.0 / exponent);
}

double weighted_lq_pow(const RadialField& u, double gamma, double beta) {
  const std::vector<double> m = u.grid().weighted_volumes(beta);
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += m[i] * abs_pow(u[i], gamma);
  return sum;
}

}  // namespace pwell
