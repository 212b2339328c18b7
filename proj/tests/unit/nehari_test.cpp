#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <boost/math/special_functions/lambert_w.hpp>

#include "oracles.hpp"
#include "pwell/constants.hpp"
#include "pwell/error.hpp"
#include "pwell/functionals.hpp"
#include "pwell/nehari.hpp"
#include "pwell/profiles.hpp"

using namespace pwell;

TEST(Fiber, LambdaLogLambdaRoot) {
  // 1 = lambda ln lambda  <=>  lambda = 1 / W(1).
  const double oracle_root = 1.0 / boost::math::lambert_w0(1.0);
  EXPECT_NEAR(oracle_root, 1.76322, 1e-5);
  EXPECT_NEAR(fiber_root(1.0, 0.0, 1.0, 2.0, 3.0), oracle_root, 1e-6);
}

TEST(Fiber, ProjectionIsAFixedPointOnTheManifold) {
  const auto P = oracle::params(2, 3, 3, 1);
  auto u = make_profile(make_grid(P, 100), {1, 1.5, 1, 0}, 4.0);
  const double lam = fiber_scale(u, P);
  const auto proj = u.scaled(lam);
  const auto rep = evaluate(proj, P);
  EXPECT_LE(std::abs(rep.I), 1e-10 * std::max(1.0, rep.grad_p));
  EXPECT_NEAR(fiber_scale(proj, P), 1.0, 1e-8);
  // u -> c u maps lambda* -> lambda*/c.
  for (double c : {0.5, 3.0}) EXPECT_NEAR(fiber_scale(u.scaled(c), P), lam / c, 1e-8 * lam / c);
}

TEST(Fiber, ZeroFieldCannotBeProjected) {
  const auto P = oracle::params(2, 3, 3, 0);
  EXPECT_THROW(fiber_scale(RadialField(make_grid(P, 8)), P), ProjectionError);
}

TEST(MountainPass, OneMemberFamilyIsTheEigenProjection) {
  const auto P = oracle::params(2, 3, 3, 0);
  auto g = make_grid(P, 64);
  const auto eig = eigen_profile(g);
  const double expected = evaluate(eig.scaled(fiber_scale(eig, P)), P).J;
  DOptions o;
  o.family_size = 1;
  o.descent_steps = 0;
  EXPECT_NEAR(estimate_d(g, P, o).value, expected, 1e-10 * expected);
}

TEST(MountainPass, MonotoneAndMinimal) {
  const auto P = oracle::params(2, 3, 3, 1);
  auto g = make_grid(P, 64);
  double prev = 1e300;
  for (int n : {1, 2, 4, 8}) {
    const double d = estimate_d(g, P, n);
    EXPECT_LE(d, prev) << n;
    prev = d;
  }
  DOptions o;
  o.family_size = 8;
  const auto best = estimate_d(g, P, o);
  const auto rep = evaluate(best.field, P);
  EXPECT_LE(std::abs(rep.I), 1e-8 * std::max(1.0, rep.grad_p));
  for (const auto& m : trial_family(g, 8)) {
    const double J = evaluate(m.field.scaled(fiber_scale(m.field, P)), P).J;
    EXPECT_GE(J, best.value) << m.label;
  }
}

TEST(MountainPass, AboveTheWellDepth) {
  const auto P = oracle::params(2, 3, 4, 0);
  auto g = make_grid(P, 100);
  const auto wc = estimate_well_constants(P, g, {16, 16, 1.25, 1e-3});
  EXPECT_GE(estimate_d(g, P, 16), 0.95 * wc.M_depth);
}

TEST(Classify, ZeroAndSmallMultiples) {
  const auto P = oracle::params(2, 3, 3, 1);
  auto g = make_grid(P, 64);
  const double d = estimate_d(g, P, 8);
  EXPECT_EQ(classify(RadialField(g), P, d).label, WellLabel::inside_W);

  const auto wc = estimate_well_constants(P, g, {8, 8, 1.0, 1e-3});
  auto u = make_profile(g, {2, 2, 1, 0}, 50.0);
  double eps = 1.0;
  while (std::pow(evaluate(u.scaled(eps), P).grad_p, 1.0 / P.p) >= wc.r_star) eps *= 0.5;
  const auto v = classify(u.scaled(eps), P, d);
  ASSERT_LT(v.J, d);
  EXPECT_EQ(v.label, WellLabel::inside_W);
}

TEST(Classify, LargeMultiplesLeaveTheWell) {
  const auto P = oracle::params(2, 3, 3, 1);
  auto g = make_grid(P, 64);
  const double d = estimate_d(g, P, 8);
  auto u = make_profile(g, {1, 1, 1, 0});
  double c = 1.0;
  while (evaluate(u.scaled(c), P).I >= 0) c *= 2;
  const auto v = classify(u.scaled(c), P, d);
  EXPECT_LT(v.I, 0);
  EXPECT_EQ(v.label, v.J < d ? WellLabel::inside_V : WellLabel::indeterminate);
  while (evaluate(u.scaled(c), P).J >= 0) c *= 2;
  EXPECT_EQ(classify(u.scaled(c), P, d).label, WellLabel::inside_V);
}

TEST(Classify, EvenAndOnNehari) {
  const auto P = oracle::params(2.5, 3.5, 3, 0.5);
  auto g = make_grid(P, 64);
  const double d = estimate_d(g, P, 4);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n01;
  for (int k = 0; k < 20; ++k) {
    std::vector<double> v(64);
    for (auto& x : v) x = 5 * n01(rng);
    RadialField u(g, v);
    EXPECT_EQ(classify(u, P, d).label, classify(u.scaled(-1), P, d).label);
  }
  auto u = make_profile(g, {2, 2, 1, 0});
  EXPECT_EQ(classify(u.scaled(fiber_scale(u, P)), P, d).label, WellLabel::on_nehari);
}
