#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pwell/error.hpp"
#include "pwell/params.hpp"

using pwell::Params;

namespace {

bool mentions(const std::vector<std::string>& clauses, const std::string& needle) {
  return std::any_of(clauses.begin(), clauses.end(),
                     [&](const std::string& c) { return c.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Params, DefaultsAreAdmissible) {
  Params P;
  EXPECT_TRUE(P.violations().empty());
  EXPECT_NO_THROW(P.validate());
  EXPECT_DOUBLE_EQ(P.critical_exponent(), 6.0);
  EXPECT_DOUBLE_EQ(P.alpha_max(), 3.0);
}

TEST(Params, EachClauseIsRejected) {
  struct Case {
    Params P;
    const char* clause;
  };
  const Case cases[] = {
      {oracle::params(1.5, 3, 3, 0), "p >= 2"},   {oracle::params(2, 3, 3, -0.1), "s >= 0"},
      {oracle::params(2, 3, 3, 2.1), "s <= 2"},   {oracle::params(3, 4, 3, 0), "N > p"},
      {oracle::params(2, 2, 3, 0), "p < q"},      {oracle::params(2, 7, 3, 0), "q < Np/(N-p)"},
      {oracle::params(2, 3, 3, 0, 0.0), "R > 0"},
  };
  for (const auto& c : cases) {
    const auto v = c.P.violations();
    EXPECT_TRUE(mentions(v, c.clause)) << c.clause;
    EXPECT_THROW(c.P.validate(), pwell::ValidationError) << c.clause;
  }
}

TEST(Params, AllViolatedClausesAreReportedTogether) {
  const auto P = oracle::params(1.0, 0.5, 3, 3.0, -1.0);
  try {
    P.validate();
    FAIL() << "expected ValidationError";
  } catch (const pwell::ValidationError& e) {
    EXPECT_TRUE(mentions(e.clauses(), "p >= 2"));
    EXPECT_TRUE(mentions(e.clauses(), "s <= 2"));
    EXPECT_TRUE(mentions(e.clauses(), "p < q"));
    EXPECT_TRUE(mentions(e.clauses(), "R > 0"));
  }
}

TEST(Params, CriticalExponentBoundaryIsExcluded) {
  EXPECT_FALSE(oracle::params(2, 6, 3, 0).violations().empty());
  EXPECT_TRUE(oracle::params(2, 5.999, 3, 0).violations().empty());
}

TEST(Params, SphereAndBallMeasures) {
  EXPECT_NEAR(pwell::unit_sphere_area(2), 2 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(pwell::unit_sphere_area(3), 4 * std::numbers::pi, 1e-13);
  EXPECT_NEAR(pwell::ball_volume(3, 1.0), 4 * std::numbers::pi / 3, 1e-13);
  EXPECT_NEAR(pwell::ball_volume(4, 1.0), std::numbers::pi * std::numbers::pi / 2, 1e-13);
}
