#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pwell/lemmas.hpp"

using namespace pwell;

TEST(LogInequalities, EqualityCases) {
  EXPECT_EQ(log_slack_upper(1.0, 2.0, 1.0), 1.0);
  EXPECT_NEAR(log_slack_upper(std::exp(1.0), 2.0, 1.0), 0.0, 1e-12);
  for (double p : {0.3, 1.0, 2.0, 7.0}) {
    EXPECT_NEAR(log_slack_lower(std::exp(-1.0 / p), p), 0.0, 1e-12);
    for (double mu : {0.1, 1.0, 4.0}) EXPECT_NEAR(log_slack_upper(std::exp(1.0 / mu), p, mu), 0.0, 1e-12);
  }
}

TEST(LogInequalities, RandomSweepHasNoViolations) {
  const auto rep = verify_log_inequalities(200000, 42);
  EXPECT_EQ(rep.violations, 0u);
  EXPECT_GE(rep.min_slack_upper, 0.0);
  EXPECT_GE(rep.min_slack_lower, 0.0);
  EXPECT_TRUE(rep.passed());
}

TEST(Concavity, ExactSolutions) {
  const auto one = concavity_blowup_oracle(1.0, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(one.t2, 1.0);
  EXPECT_NEAR(one.observed_blowup, 1.0, 1e-3);
  // psi = 1/(1-t) crosses 1/eps^{1/4} at 1 - eps^{1/4}.
  EXPECT_NEAR(one.observed_blowup, 1.0 - std::pow(2.0, -13), 1e-9);
  const auto two = concavity_blowup_oracle(2.0, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(two.t2, 0.5);
  EXPECT_NEAR(two.observed_blowup, 0.5, 1e-3);
  const auto half = concavity_blowup_oracle(0.5, 1.0, 1.0);
  EXPECT_LE(half.observed_blowup, half.t2 * (1 + 1e-3));
}

TEST(Concavity, ScalingTheSlopeHalvesT2) {
  const auto a = concavity_blowup_oracle(1.5, 2.0, 1.0);
  const auto b = concavity_blowup_oracle(1.5, 2.0, 2.0);
  EXPECT_NEAR(b.t2, a.t2 / 2, 1e-15);
  EXPECT_NEAR(b.observed_blowup, a.observed_blowup / 2, 1e-8);
}

TEST(HardySobolevProbe, RandomProbesStayBelowTheInflatedEstimate) {
  const auto P = oracle::params(2, 3, 3, 1);
  const auto rep = verify_hardy_sobolev(make_grid(P, 100), P, 16, 1.25, 100, 9);
  EXPECT_GT(rep.estimate, 0.0);
  EXPECT_TRUE(rep.bounded);
}
