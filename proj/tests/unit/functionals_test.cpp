#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pwell/functionals.hpp"

using namespace pwell;

TEST(Functionals, LogSourceConventions) {
  auto g = make_grid(oracle::params(2, 3, 3, 0), 10);
  EXPECT_EQ(log_source_integral(RadialField(g), 3.0), 0.0);
  auto ones = RadialField::sample(g, [](double r) { return r < 0.5 ? 1.0 : -1.0; });
  EXPECT_EQ(log_source_integral(ones, 3.0), 0.0);
  auto e = RadialField::sample(g, [](double) { return std::numbers::e; });
  EXPECT_NEAR(log_source_integral(e, 3.0), std::pow(std::numbers::e, 3) * 4 * std::numbers::pi / 3, 1e-10);
}

TEST(Functionals, ZeroFieldReport) {
  const auto P = oracle::params(2, 3, 3, 1);
  const auto r = evaluate(RadialField(make_grid(P, 10)), P);
  EXPECT_EQ(r.J, 0.0);
  EXPECT_EQ(r.I, 0.0);
  EXPECT_EQ(r.L, 0.0);
  EXPECT_EQ(decomposition_residual(r, P), 0.0);
}

TEST(Functionals, UnitModulusKillsTheLogTerm) {
  const auto P = oracle::params(2.5, 4, 3, 0.5);
  auto u = RadialField::sample(make_grid(P, 20), [](double r) { return r < 0.3 ? 0.0 : (r < 0.7 ? 1.0 : -1.0); });
  const auto rep = evaluate(u, P);
  EXPECT_EQ(rep.log_term, 0.0);
  EXPECT_DOUBLE_EQ(rep.I, rep.grad_p);
  EXPECT_DOUBLE_EQ(rep.J, rep.grad_p / P.p + rep.lq_q / (P.q * P.q));
}

TEST(Functionals, ConstituentsAgreeWithQuadratureOracle) {
  const auto P = oracle::params(2, 3, 3, 0);
  auto u = RadialField::sample(make_grid(P, 20000), [](double r) { return 1.0 - r; });
  const auto rep = evaluate(u, P);
  const double grad = oracle::radial_integral([](double) { return 1.0; }, 3, 1.0);
  const double lq = oracle::radial_integral([](double r) { return std::pow(1 - r, 3); }, 3, 1.0);
  const double lg = oracle::radial_integral(
      [](double r) { return r < 1 ? std::pow(1 - r, 3) * std::log(1 - r) : 0.0; }, 3, 1.0);
  const double L = 0.5 * oracle::radial_integral([](double r) { return (1 - r) * (1 - r); }, 3, 1.0);
  EXPECT_NEAR(rep.grad_p / grad, 1.0, 1e-6);
  EXPECT_NEAR(rep.lq_q / lq, 1.0, 1e-6);
  EXPECT_NEAR(rep.log_term / lg, 1.0, 1e-6);
  EXPECT_NEAR(rep.L / L, 1.0, 1e-6);
}

TEST(Functionals, DecompositionIdentity) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n01;
  for (const auto& P : {oracle::params(2, 4, 3, 0), oracle::params(3, 5, 5, 1)}) {
    auto g = make_grid(P, 64);
    for (int k = 0; k < 20; ++k) {
      std::vector<double> v(64);
      for (auto& x : v) x = 3.0 * n01(rng);
      const auto rep = evaluate(RadialField(g, v), P);
      EXPECT_LE(decomposition_residual(rep, P), 1e-12 * (1 + std::abs(rep.J)));
    }
    const auto rep = evaluate(RadialField::sample(g, [](double r) { return 1 - r; }), P);
    EXPECT_LE(decomposition_residual(rep, P), 1e-12 * (1 + std::abs(rep.J)));
  }
}

TEST(Functionals, FiberingMapMatchesDirectEvaluation) {
  const auto P = oracle::params(2.5, 3.5, 3, 1);
  auto u = RadialField::sample(make_grid(P, 100), [](double r) { return 3 * (1 - r * r); });
  const auto base = evaluate(u, P);
  for (double lam : {0.5, 1.0, 2.0}) {
    const auto direct = evaluate(u.scaled(lam), P);
    EXPECT_NEAR(fiber_nehari(base, P, lam), direct.I, 1e-10 * std::abs(direct.I)) << lam;
    EXPECT_NEAR(fiber_energy(base, P, lam), direct.J, 1e-10 * std::abs(direct.J)) << lam;
  }
}

TEST(Functionals, EvenInU) {
  const auto P = oracle::params(2, 3, 3, 1);
  auto u = RadialField::sample(make_grid(P, 50), [](double r) { return 2 * std::cos(2 * r); });
  const auto a = evaluate(u, P);
  const auto b = evaluate(u.scaled(-1), P);
  EXPECT_EQ(a.J, b.J);
  EXPECT_EQ(a.I, b.I);
  EXPECT_EQ(a.L, b.L);
}
