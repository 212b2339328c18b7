#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pwell/constants.hpp"
#include "pwell/error.hpp"
#include "pwell/functionals.hpp"
#include "pwell/nehari.hpp"
#include "pwell/quadrature.hpp"

using namespace pwell;

TEST(Embedding, L2ConstantMatchesFirstEigenvalue) {
  const auto P = oracle::params(2, 3, 3, 0);
  auto g = make_grid(P, 200);
  const double est = estimate_embedding_constant(g, P, 2.0, 16);
  // 1/sqrt(lambda_1) with lambda_1 = pi^2 on the unit ball.
  const double exact = 1.0 / std::sqrt(first_dirichlet_eigenvalue(3, 1.0));
  EXPECT_NEAR(exact, 1.0 / std::numbers::pi, 1e-12);
  EXPECT_NEAR(est, exact, 0.1 * exact);
}

TEST(Embedding, FamilyMaximumDominatesTheEigenSeed) {
  const auto P = oracle::params(2.5, 3, 4, 0);
  auto g = make_grid(P, 64);
  const auto eig = eigen_profile(g);
  const double seed_ratio = lq_norm(eig, P.p) / std::pow(grad_norm_p(eig, P.p), 1.0 / P.p);
  EXPECT_GE(estimate_embedding_constant(g, P, P.p, 8), seed_ratio);
}

TEST(Embedding, MonotoneInFamilySize) {
  const auto P = oracle::params(2, 3, 3, 1);
  auto g = make_grid(P, 64);
  double prev = 0.0;
  for (int n : {2, 4, 8, 16}) {
    const double v = estimate_embedding_constant(g, P, 4.0, n);
    EXPECT_GE(v, prev) << n;
    prev = v;
  }
}

TEST(Embedding, TargetOutsideTheSobolevRangeIsRejected) {
  const auto P = oracle::params(2, 3, 3, 0);
  auto g = make_grid(P, 16);
  EXPECT_THROW(estimate_embedding_constant(g, P, 7.0, 2), ConfigError);
  EXPECT_THROW(estimate_embedding_constant(g, P, 1.5, 2), ConfigError);
}

TEST(WellRadius, ClosedForms) {
  EXPECT_NEAR(r_alpha(0.5, 1.0, oracle::params(2, 2.5, 3, 0)), 0.5, 1e-15);
  EXPECT_NEAR(r_alpha(1.0, 2.0, oracle::params(2, 3, 3, 0)), 0.25, 1e-15);
  const auto P = oracle::params(2, 3, 3, 0);
  // Doubling B scales r by 2^{-(q+alpha)/(q+alpha-p)}.
  const double a = 0.7;
  const double e = P.q + a;
  EXPECT_NEAR(r_alpha(a, 0.6, P) / r_alpha(a, 0.3, P), std::pow(2.0, -e / (e - P.p)), 1e-13);
  EXPECT_THROW(r_alpha(3.5, 1.0, P), DomainError);
  EXPECT_THROW(r_alpha(0.0, 1.0, P), DomainError);
}

TEST(WellRadius, SigmaClosedForms) {
  const auto P = oracle::params(2, 3, 3, 0);
  EXPECT_NEAR(sigma_alpha(0.8, 0.4, P, 1.0), r_alpha(0.8, 0.4, P), 1e-14);
  EXPECT_NEAR(sigma_alpha(1.0, 1.0, P, std::exp(2.0)), std::exp(1.0 / 3.0), 1e-13);
  EXPECT_LT(sigma_alpha(1e-6, 0.5, P, 4.0), 1e-5);
}

TEST(WellRadius, StarDominatesEverySampleAndStaysBelowSup) {
  const auto P = oracle::params(2, 3, 3, 0);
  auto g = make_grid(P, 64);
  const auto wc = estimate_well_constants(P, g, {8, 8, 1.25, 1e-3});
  ASSERT_EQ(wc.alpha_table.size(), 8u);
  for (const auto& a : wc.alpha_table) EXPECT_GE(wc.r_star, a.r_alpha);
  EXPECT_GT(wc.r_star, 0.0);
  EXPECT_LE(wc.r_star, wc.r_sup);
  EXPECT_NEAR(wc.M_depth, (P.q - P.p) / (P.p * P.q) * std::pow(wc.r_star, P.p), 1e-12);
  EXPECT_NEAR(wc.C1, wc.C_tilde / 2, 1e-15);
  EXPECT_NEAR(wc.C2, P.p * P.q / (P.q - P.p) * wc.C_tilde / 2, 1e-13);
}

TEST(WellRadius, OnePointGridIsDegenerate) {
  const auto P = oracle::params(2, 3, 3, 0);
  auto g = make_grid(P, 32);
  const double kappa = estimate_embedding_constant(g, P, P.q, 4);
  const double alpha = 0.9;
  const auto rs = r_star_over(g, P, std::span<const double>(&alpha, 1), 4, 1.0, kappa);
  const double B = estimate_embedding_constant(g, P, P.q + alpha, 4);
  EXPECT_DOUBLE_EQ(rs.best_alpha, alpha);
  EXPECT_NEAR(rs.r_star, r_alpha(alpha, B, P), 1e-12 * rs.r_star);
}

TEST(WellRadius, SixteenSamplesMatchDenseSampling) {
  const auto P = oracle::params(2, 3, 4, 0);
  auto g = make_grid(P, 64);
  const double coarse = r_star(P, g, 16, 8).r_star;
  const double dense = r_star(P, g, 256, 8).r_star;
  EXPECT_NEAR(coarse, dense, 0.05 * dense);
}

TEST(CTilde, Branches) {
  EXPECT_DOUBLE_EQ(c_tilde(0.7, oracle::params(2, 3, 4, 2), 5.0), 0.7);
  // N = 3, s = 0, p = 3 gives exponent 5/3 - 2/3 = 1; the clause only
  // depends on N, s and p, so the regime check is bypassed on purpose.
  Params P = oracle::params(3, 4, 3, 0);
  EXPECT_NEAR(c_tilde(0.7, P, 2.5), 0.7 * 2.5, 1e-14);
  EXPECT_NEAR(c_tilde(0.7, oracle::params(2, 3, 3, 1), 8.0), 0.7 * 2.0, 1e-14);
  EXPECT_DOUBLE_EQ(hardy_gradient_exponent(oracle::params(2, 3, 3, 1)), 1.5);
}

TEST(HardySobolev, AnalyticRatio) {
  const auto P = oracle::params(2, 3, 3, 0);
  auto val = [&](int M) {
    auto u = RadialField::sample(make_grid(P, M), [](double r) { return 1 - r; });
    return hardy_sobolev_ratio(u, P, 2.0, 2.0);
  };
  EXPECT_NEAR(val(400), 1.0, 1e-3);
  EXPECT_GE(std::abs(val(50) - 1.0) / std::abs(val(100) - 1.0), 3.5);
}

TEST(HardySobolev, HomogeneityAndZeroWeight) {
  const auto P = oracle::params(2, 3, 3, 1);
  auto g = make_grid(P, 64);
  auto u = RadialField::sample(g, [](double r) { return std::cos(1.5 * r) * (1 - r); });
  const double n = hardy_gradient_exponent(P);
  const double base = hardy_sobolev_ratio(u, P, P.s, n);
  for (double c : {-3.0, 0.1, 2.0, 17.0}) {
    EXPECT_NEAR(hardy_sobolev_ratio(u.scaled(c), P, P.s, n), base, 1e-12 * base) << c;
  }
  EXPECT_NEAR(hardy_sobolev_ratio(u.scaled(2), P, 2.0, 2.0), hardy_sobolev_ratio(u, P, 2.0, 2.0), 1e-12);
  // beta = 0: plain Sobolev quotient ||u||_gamma^gamma / ||grad u||_n^gamma.
  const double m = 1.2, gamma = m * 3 / (3 - m);
  EXPECT_NEAR(hardy_sobolev_ratio(u, P, 0.0, m),
              lq_norm_pow(u, gamma) / std::pow(grad_norm_p(u, m), gamma / m), 1e-12);
}

TEST(WellConstants, SafetyFactorDirections) {
  const auto P = oracle::params(2, 3, 3, 1);
  auto g = make_grid(P, 64);
  const auto raw = estimate_well_constants(P, g, {6, 6, 1.0, 1e-3});
  const auto safe = estimate_well_constants(P, g, {6, 6, 1.25, 1e-3});
  EXPECT_DOUBLE_EQ(raw.B_alpha, safe.B_alpha);
  EXPECT_LT(safe.r_star, raw.r_star);
  EXPECT_LT(safe.M_depth, raw.M_depth);
  EXPECT_GT(safe.C_tilde, raw.C_tilde);
}

TEST(WellConstants, SignStructureBelowTheWellRadius) {
  // Any field with ||grad u||_p <= r(alpha), using the raw estimate of B_alpha, has I > 0.
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n01;
  for (const auto& P : {oracle::params(2, 3, 3, 0), oracle::params(3, 4, 4, 1)}) {
    auto g = make_grid(P, 64);
    const auto wc = estimate_well_constants(P, g, {8, 8, 1.0, 1e-3});
    for (const auto& a : wc.alpha_table) {
      for (int k = 0; k < 10; ++k) {
        std::vector<double> v(64);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (1 - g->centers()[i]) * (1 + 0.5 * n01(rng));
        RadialField u(g, v);
        const double scale = a.r_alpha / std::pow(grad_norm_p(u, P.p), 1.0 / P.p);
        EXPECT_GT(evaluate(u.scaled(scale), P).I, 0.0);
      }
    }
  }
}

TEST(WellConstants, DepthBelowMountainPassEstimate) {
  for (const auto& P : {oracle::params(2, 3, 3, 0), oracle::params(2, 3, 4, 0), oracle::params(3, 4, 4, 1)}) {
    auto g = make_grid(P, 64);
    const auto wc = estimate_well_constants(P, g, {8, 8, 1.25, 1e-3});
    const double d = estimate_d(g, P, 8);
    EXPECT_GE(d, wc.M_depth - 0.05 * std::abs(d));
  }
}
