#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pwell/functionals.hpp"
#include "pwell/quadrature.hpp"

using namespace pwell;

namespace {

constexpr double kPi = std::numbers::pi;

RadialField sample(int cells, double s, std::function<double(double)> f, int N = 3) {
  return RadialField::sample(make_grid(oracle::params(2, 3, N, s), cells), f);
}

// Error ratio e(M)/e(2M) of a grid functional against its exact value.
double refinement_ratio(const std::function<double(int)>& value, double exact, int M) {
  return std::abs(value(M) - exact) / std::abs(value(2 * M) - exact);
}

}  // namespace

TEST(Quadrature, ZeroField) {
  auto g = make_grid(oracle::params(2, 3, 3, 1), 8);
  RadialField z(g);
  EXPECT_EQ(weighted_l2_sq(z, 1.0), 0.0);
  EXPECT_EQ(grad_norm_p(z, 2.0), 0.0);
  EXPECT_EQ(lq_norm(z, 3.0), 0.0);
}

TEST(Quadrature, ConstantFieldIsExact) {
  auto one = sample(10, 0.0, [](double) { return 1.0; });
  EXPECT_NEAR(weighted_l2_sq(one, 0.0), 4 * kPi / 3, 1e-10);
  for (double e : {1.0, 2.0, 3.5, 6.0}) {
    EXPECT_NEAR(lq_norm(one, e), std::pow(4 * kPi / 3, 1.0 / e), 1e-12) << e;
  }
}

TEST(Quadrature, AnalyticProfilesConvergeAtSecondOrder) {
  const auto lin = [](double r) { return 1.0 - r; };
  const auto quad = [](double r) { return 1.0 - r * r; };
  // Exact values from the independent radial oracle.
  const double l2_s2 = oracle::singular_radial_integral([&](double r) { return lin(r) * lin(r); }, 3, 2.0, 1.0);
  const double grad_lin = oracle::radial_integral([](double) { return 1.0; }, 3, 1.0);
  const double grad_quad = oracle::radial_integral([](double r) { return 4 * r * r; }, 3, 1.0);
  const double l2_lin = std::sqrt(oracle::radial_integral([&](double r) { return lin(r) * lin(r); }, 3, 1.0));
  EXPECT_NEAR(l2_s2, 4 * kPi / 3, 1e-10);
  EXPECT_NEAR(grad_quad, 16 * kPi / 5, 1e-10);
  EXPECT_NEAR(l2_lin, std::sqrt(2 * kPi / 15), 1e-10);

  auto wl2 = [&](int M) { return weighted_l2_sq(sample(M, 2.0, lin), 2.0); };
  auto g1 = [&](int M) { return grad_norm_p(sample(M, 0.0, lin), 2.0); };
  auto g2 = [&](int M) { return grad_norm_p(sample(M, 0.0, quad), 2.0); };
  auto lq = [&](int M) { return lq_norm(sample(M, 0.0, lin), 2.0); };

  EXPECT_NEAR(wl2(200), l2_s2, 1e-3);
  EXPECT_NEAR(g1(200), grad_lin, 1e-3);
  EXPECT_NEAR(g2(200), grad_quad, 1e-3);
  EXPECT_NEAR(lq(200), l2_lin, 1e-4);
  EXPECT_GE(refinement_ratio(wl2, l2_s2, 50), 3.5);
  EXPECT_GE(refinement_ratio(g1, grad_lin, 50), 3.5);
  EXPECT_GE(refinement_ratio(g2, grad_quad, 50), 3.5);
  EXPECT_GE(refinement_ratio(lq, l2_lin, 50), 3.5);
}

TEST(Quadrature, LogSourceIntegralConverges) {
  const auto lin = [](double r) { return 2.0 * (1.0 - r); };
  const double exact = oracle::radial_integral(
      [&](double r) {
        const double u = lin(r);
        return u > 0 ? std::pow(u, 3) * std::log(u) : 0.0;
      },
      3, 1.0);
  auto val = [&](int M) { return log_source_integral(sample(M, 0.0, lin), 3.0); };
  EXPECT_GE(refinement_ratio(val, exact, 50), 3.5);
}

TEST(Quadrature, PositivityOnRandomFields) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n01;
  auto g = make_grid(oracle::params(2, 3, 3, 1.5), 32);
  for (int k = 0; k < 50; ++k) {
    std::vector<double> v(32);
    for (auto& x : v) x = n01(rng);
    RadialField u(g, v);
    EXPECT_GT(weighted_l2_sq(u, 1.5), 0.0);
    EXPECT_GT(grad_norm_p(u, 2.5), 0.0);
    EXPECT_GT(lq_norm(u, 3.0), 0.0);
  }
}

TEST(Quadrature, WeightedLqMatchesPlainAtZeroWeight) {
  auto u = sample(40, 0.0, [](double r) { return std::cos(r); });
  EXPECT_NEAR(weighted_lq_pow(u, 2.5, 0.0), lq_norm_pow(u, 2.5), 1e-12);
}
