#include <gtest/gtest.h>

#include <random>

#include "covermip/error.hpp"
#include "covermip/lp.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

namespace covermip {
namespace {

using testing::draw;

TEST(Simplex, SingleBoundedVariable) {
  LinearModel m;
  m.add_variable("x", Rational(0), Rational(5));
  m.add_constraint("r", {{0, Rational(1)}}, Relation::GreaterEqual, Rational(3));
  m.objective.terms = {{0, Rational(1)}};
  const LpResult r = solve(m);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.values[0], 3);
  EXPECT_EQ(r.objective, 3);
}

TEST(Simplex, Infeasible) {
  LinearModel m;
  m.add_variable("x", Rational(0), std::nullopt);
  m.add_constraint("lo", {{0, Rational(1)}}, Relation::GreaterEqual, Rational(2));
  m.add_constraint("hi", {{0, Rational(1)}}, Relation::LessEqual, Rational(1));
  EXPECT_EQ(solve(m).status, LpStatus::Infeasible);
}

TEST(Simplex, Unbounded) {
  LinearModel m;
  m.add_variable("x", Rational(0), std::nullopt);
  m.add_variable("y", std::nullopt, std::nullopt);
  m.add_constraint("r", {{0, Rational(1)}, {1, Rational(-1)}}, Relation::GreaterEqual, Rational(1));
  m.objective.terms = {{1, Rational(1)}};
  EXPECT_EQ(solve(m).status, LpStatus::Unbounded);
}

TEST(Simplex, MaximizeWithConstantAndFreeVariable) {
  LinearModel m;
  m.add_variable("x", Rational(0), Rational(4));
  m.add_variable("y", std::nullopt, std::nullopt);
  m.add_constraint("a", {{0, Rational(1)}, {1, Rational(1)}}, Relation::LessEqual, Rational(3));
  m.add_constraint("b", {{1, Rational(1)}}, Relation::GreaterEqual, Rational(-2));
  m.objective.sense = ObjSense::Maximize;
  m.objective.terms = {{0, Rational(2)}, {1, Rational(1)}};
  m.objective.constant = Rational(1, 2);
  const LpResult r = solve(m);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  // x = 4, y = -1 -> 8 - 1 + 1/2
  EXPECT_EQ(r.objective, Rational(15, 2));
  EXPECT_EQ(r.values[0], 4);
  EXPECT_EQ(r.values[1], -1);
}

TEST(Simplex, EqualityRowsAndRedundancy) {
  LinearModel m;
  for (int i = 0; i < 3; ++i) m.add_variable("x" + std::to_string(i), Rational(0), std::nullopt);
  m.add_constraint("e1", {{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1)}}, Relation::Equal, Rational(1));
  m.add_constraint("e2", {{0, Rational(2)}, {1, Rational(2)}, {2, Rational(2)}}, Relation::Equal, Rational(2));
  m.add_constraint("e3", {{0, Rational(1)}, {1, Rational(-1)}}, Relation::Equal, Rational(0));
  m.objective.terms = {{0, Rational(3)}, {1, Rational(1)}, {2, Rational(5)}};
  const LpResult r = solve(m);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.objective, 2);
  EXPECT_EQ(r.values[0], Rational(1, 2));
}

TEST(Simplex, EmptyRowAndEmptyObjective) {
  LinearModel m;
  m.add_variable("x", Rational(-1), Rational(1));
  m.add_constraint("empty", {}, Relation::LessEqual, Rational(0));
  const LpResult r = solve(m);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.objective, 0);
  m.constraints[0].rhs = -1;
  EXPECT_EQ(solve(m).status, LpStatus::Infeasible);
}

TEST(Simplex, FixedAndNegativeBounds) {
  LinearModel m;
  m.add_variable("x", Rational(-3), Rational(-1));
  m.add_variable("y", Rational(2), Rational(2));
  m.add_constraint("r", {{0, Rational(1)}, {1, Rational(1)}}, Relation::GreaterEqual, Rational(0));
  m.objective.terms = {{0, Rational(1)}};
  const LpResult r = solve(m);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.values[0], -2);
  EXPECT_EQ(r.values[1], 2);
}

TEST(CheckModel, RejectsBadInput) {
  LinearModel m;
  m.add_variable("x", Rational(1), Rational(0));
  EXPECT_THROW(check_model(m), PreconditionError);
  LinearModel n;
  n.add_variable("x", Rational(0), Rational(1));
  n.add_constraint("r", {{3, Rational(1)}}, Relation::LessEqual, Rational(0));
  EXPECT_THROW(check_model(n), PreconditionError);
  LinearModel d;
  d.add_variable("x", Rational(0), Rational(1));
  d.add_constraint("r", {{0, Rational(1)}, {0, Rational(1)}}, Relation::LessEqual, Rational(0));
  EXPECT_THROW(check_model(d), PreconditionError);
}

LinearModel random_bounded(std::mt19937_64& rng) {
  LinearModel m;
  const int n = static_cast<int>(draw(rng, 1, 4));
  const int rows = static_cast<int>(draw(rng, 1, 4));
  for (int i = 0; i < n; ++i) {
    const std::int64_t lo = draw(rng, -3, 2);
    m.add_variable("x" + std::to_string(i), Rational(lo), Rational(lo + draw(rng, 0, 5)));
  }
  for (int r = 0; r < rows; ++r) {
    Terms t;
    for (int i = 0; i < n; ++i) {
      const std::int64_t a = draw(rng, -4, 4);
      if (a != 0) t.emplace_back(i, Rational(a, draw(rng, 1, 3)));
    }
    const auto rel = static_cast<Relation>(draw(rng, 0, 2));
    m.add_constraint("r" + std::to_string(r), std::move(t), rel, Rational(draw(rng, -6, 6), draw(rng, 1, 2)));
  }
  for (int i = 0; i < n; ++i) m.objective.terms.emplace_back(i, Rational(draw(rng, -5, 5)));
  m.objective.sense = draw(rng, 0, 1) ? ObjSense::Maximize : ObjSense::Minimize;
  return m;
}

class SimplexVsVertices : public ::testing::TestWithParam<PricingRule> {};

TEST_P(SimplexVsVertices, RandomBoundedModels) {
  std::mt19937_64 rng(2024);
  int optimal = 0;
  for (int t = 0; t < 400; ++t) {
    const LinearModel m = random_bounded(rng);
    const LpResult r = solve(m, GetParam());
    const auto oracle = testing::vertex_enumeration(m);
    if (!oracle) {
      EXPECT_EQ(r.status, LpStatus::Infeasible) << t;
      continue;
    }
    ASSERT_EQ(r.status, LpStatus::Optimal) << t;
    EXPECT_EQ(r.objective, *oracle) << t;
    ++optimal;
    // returned point is feasible
    for (const auto& c : m.constraints) {
      Rational lhs = 0;
      for (const auto& [var, coef] : c.terms) lhs += coef * r.values[var];
      if (c.relation == Relation::LessEqual) EXPECT_LE(lhs, c.rhs);
      if (c.relation == Relation::GreaterEqual) EXPECT_GE(lhs, c.rhs);
      if (c.relation == Relation::Equal) EXPECT_EQ(lhs, c.rhs);
    }
    // vertex: at most rows-many variables strictly inside their bounds
    std::vector<int> all(static_cast<size_t>(m.num_vars()));
    for (int i = 0; i < m.num_vars(); ++i) all[i] = i;
    EXPECT_LE(count_fractional(m, r, all), m.num_constraints());
  }
  EXPECT_GT(optimal, 100);
}

INSTANTIATE_TEST_SUITE_P(Pricing, SimplexVsVertices,
                         ::testing::Values(PricingRule::Bland, PricingRule::Dantzig));

TEST(SimplexSolver, WarmObjectiveSweepMatchesColdSolves) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    LinearModel m = random_bounded(rng);
    SimplexSolver warm(m);
    for (int k = 0; k < 6; ++k) {
      Objective obj;
      obj.sense = draw(rng, 0, 1) ? ObjSense::Maximize : ObjSense::Minimize;
      for (int i = 0; i < m.num_vars(); ++i) obj.terms.emplace_back(i, Rational(draw(rng, -5, 5)));
      obj.constant = Rational(draw(rng, -2, 2));
      warm.set_objective(obj);
      m.objective = obj;
      const LpResult a = warm.solve();
      const LpResult b = solve(m);
      ASSERT_EQ(a.status, b.status);
      if (a.status == LpStatus::Optimal) EXPECT_EQ(a.objective, b.objective);
    }
  }
}

TEST(CountFractional, KnapsackLpHasAtMostOneFractional) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    LinearModel m;
    const int n = static_cast<int>(draw(rng, 1, 8));
    Terms row;
    for (int i = 0; i < n; ++i) {
      m.add_variable("y" + std::to_string(i), Rational(0), Rational(1));
      row.emplace_back(i, Rational(draw(rng, 1, 20)));
      m.objective.terms.emplace_back(i, Rational(draw(rng, 1, 20)));
    }
    m.add_constraint("k", std::move(row), Relation::GreaterEqual, Rational(draw(rng, 0, 20 * n)));
    const LpResult r = solve(m);
    if (r.status != LpStatus::Optimal) continue;
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[i] = i;
    EXPECT_LE(count_fractional(m, r, all), 1);
  }
}

TEST(CountFractional, IntegralVertexHasNone) {
  LinearModel m;
  m.add_variable("a", Rational(0), Rational(1));
  m.add_variable("b", Rational(0), Rational(1));
  m.add_constraint("r", {{0, Rational(1)}, {1, Rational(1)}}, Relation::GreaterEqual, Rational(1));
  m.objective.terms = {{0, Rational(1)}, {1, Rational(2)}};
  const LpResult r = solve(m);
  EXPECT_EQ(count_fractional(m, r, {0, 1}), 0);
}

}  // namespace
}  // namespace covermip
