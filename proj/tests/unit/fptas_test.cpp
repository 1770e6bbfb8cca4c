#include <gtest/gtest.h>

#include <random>

#include "covermip/decomposition.hpp"
#include "covermip/error.hpp"
#include "covermip/exact.hpp"
#include "covermip/fptas.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

namespace covermip {
namespace {

using testing::draw;

MkcInstance worked_example() {
  MkcInstance in;
  in.eta = 2;
  in.mu = 1;
  in.fbar = {2, 100};
  in.vbar = {100};
  in.cbar = {1};
  in.wbar = {{1}, {100}};
  in.dbar = {1};
  return in;
}

MkcInstance random_one_dim(std::mt19937_64& rng, int eta) {
  MkcInstance in;
  in.eta = eta;
  in.mu = 1;
  const std::int64_t d = draw(rng, 0, 20);
  in.dbar = {d};
  in.cbar = {draw(rng, 0, d)};
  in.vbar = {draw(rng, 0, 30)};
  for (int i = 0; i < eta; ++i) {
    in.fbar.push_back(draw(rng, 0, 60));
    in.wbar.push_back({draw(rng, 0, d)});
  }
  return in;
}

TEST(PolyEta, ParseAndEvaluate) {
  EXPECT_EQ(PolyEta::parse("eta").eval(4), 4);
  EXPECT_EQ(PolyEta::parse("eta^2").eval(4), 16);
  EXPECT_EQ(PolyEta::parse("const:7").eval(4), 7);
  EXPECT_EQ(PolyEta::parse("const:7").str(), "const:7");
  for (const char* bad : {"", "eta^3", "const:0", "const:", "const:x", "n"}) {
    EXPECT_THROW(PolyEta::parse(bad), ParseError) << bad;
  }
}

TEST(Scale, WorkedExample) {
  FptasConfig cfg;
  cfg.epsilon = 1;
  const ScaledCosts s = scale(worked_example(), cfg);
  EXPECT_EQ(s.lambda, 25);
  EXPECT_EQ(s.f_prime, (std::vector<std::int64_t>{1, 4}));
  EXPECT_EQ(s.v_prime, 4);
}

TEST(Scale, SmallCostsStayUnscaled) {
  MkcInstance in = worked_example();
  in.fbar = {2, 3};
  FptasConfig cfg;
  cfg.epsilon = 1;
  const ScaledCosts s = scale(in, cfg);
  EXPECT_EQ(s.lambda, 1);
  EXPECT_EQ(s.f_prime, (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(s.v_prime, 100);
}

TEST(Scale, SingleItemAndSoundness) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const MkcInstance in = random_one_dim(rng, static_cast<int>(draw(rng, 1, 8)));
    FptasConfig cfg;
    cfg.epsilon = Rational(draw(rng, 1, 9), draw(rng, 1, 3));
    const ScaledCosts s = scale(in, cfg);
    EXPECT_GE(s.lambda, 1);
    for (int i = 0; i < in.eta; ++i) {
      const Rational exact = Rational(in.fbar[i]) / s.lambda;
      EXPECT_GE(Rational(s.f_prime[i]), exact);
      EXPECT_LE(Rational(s.f_prime[i]), exact + 1);
      EXPECT_LE(s.f_prime[i], in.fbar[i]);
    }
    if (s.lambda == 1) EXPECT_EQ(s.f_prime, in.fbar);
  }
}

TEST(Dp, SingleItem) {
  const DpTable t = dp({2}, {7});
  EXPECT_EQ(t.rows, 2);
  EXPECT_EQ(t.columns, 3);
  EXPECT_EQ(t.at(1, 0), 0);
  EXPECT_EQ(t.at(1, 1), 0);
  EXPECT_EQ(t.at(1, 2), 7);
}

TEST(Dp, TwoUnitCostItems) {
  const DpTable t = dp({1, 1}, {3, 5});
  EXPECT_EQ(t.at(2, 1), 5);
  EXPECT_EQ(t.at(2, 2), 8);
}

TEST(Dp, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 150; ++t) {
    const int eta = static_cast<int>(draw(rng, 1, 10));
    std::vector<std::int64_t> costs;
    std::vector<std::int64_t> weights;
    for (int i = 0; i < eta; ++i) {
      costs.push_back(draw(rng, 0, 12));
      weights.push_back(draw(rng, 0, 30));
    }
    const DpTable table = dp(costs, weights);
    for (int i = 0; i <= eta; ++i) {
      for (std::int64_t j = 0; j < table.columns; ++j) {
        ASSERT_EQ(table.at(i, j), testing::brute_force_knapsack(costs, weights, i, j)) << t;
        if (j > 0) EXPECT_GE(table.at(i, j), table.at(i, j - 1));
        if (i > 0) EXPECT_GE(table.at(i, j), table.at(i - 1, j));
      }
    }
    std::int64_t all = 0;
    for (auto w : weights) all += w;
    EXPECT_EQ(table.at(eta, table.columns - 1), all);
  }
}

TEST(Dp, TableCap) { EXPECT_THROW(dp({1000, 1000}, {1, 1}, 100), CapExceeded); }

TEST(OneMkcFptas, WorkedExample) {
  for (const Rational& eps : {Rational(1, 2), Rational(1, 100)}) {
    FptasConfig cfg;
    cfg.epsilon = eps;
    FptasTrace trace;
    const MkcSolution sol = one_mkc_fptas(worked_example(), cfg, &trace);
    EXPECT_EQ(sol.value, 2);
    EXPECT_EQ(sol.y, (std::vector<std::uint8_t>{1, 0}));
  }
  FptasConfig tiny;
  tiny.epsilon = Rational(1, 100);
  FptasTrace trace;
  one_mkc_fptas(worked_example(), tiny, &trace);
  EXPECT_EQ(trace.scaled.lambda, 1);
}

TEST(OneMkcFptas, DemandCoveredByAlpha) {
  MkcInstance in = worked_example();
  in.vbar = {0};
  in.cbar = {1};
  const MkcSolution sol = one_mkc_fptas(in, FptasConfig{});
  EXPECT_EQ(sol.value, 0);
  EXPECT_EQ(sol.y, (std::vector<std::uint8_t>{0, 0}));
  EXPECT_EQ(sol.alpha[0], 1);
}

TEST(OneMkcFptas, Infeasible) {
  MkcInstance in = worked_example();
  in.dbar = {500};
  EXPECT_THROW(one_mkc_fptas(in, FptasConfig{}), InfeasibleError);
}

// q must be the minimum of the sweep expression over every feasible level.
TEST(OneMkcFptas, SweepIsFullScanMinimum) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const MkcInstance in = random_one_dim(rng, static_cast<int>(draw(rng, 1, 8)));
    if (!is_feasible(in)) continue;
    FptasConfig cfg;
    cfg.epsilon = Rational(1, 2);
    FptasTrace trace;
    one_mkc_fptas(in, cfg, &trace);
    std::vector<std::int64_t> costs;
    std::vector<std::int64_t> weights;
    for (int i : trace.free_items) {
      costs.push_back(trace.scaled.f_prime[i]);
      weights.push_back(in.wbar[i][0]);
    }
    std::int64_t total = 0;
    for (auto c : costs) total += c;
    std::optional<Rational> best;
    for (std::int64_t j = 0; j <= total; ++j) {
      const std::int64_t m = testing::brute_force_knapsack(costs, weights, static_cast<int>(costs.size()), j);
      if (m < trace.residual_demand - in.cbar[0]) continue;
      const Rational value = Rational(j) + trace.scaled.v_prime * std::max<std::int64_t>(trace.residual_demand - m, 0);
      if (!best || value < *best) best = value;
    }
    ASSERT_TRUE(best);
    EXPECT_EQ(trace.q, *best);
  }
}

class OneMkcRatio : public ::testing::TestWithParam<int> {};

TEST_P(OneMkcRatio, WithinFactorAndExactWhenUnscaled) {
  const Rational eps = GetParam() == 0 ? Rational(1) : Rational(1, 2);
  std::mt19937_64 rng(400 + GetParam());
  int unscaled = 0;
  for (int t = 0; t < 150; ++t) {
    MkcInstance in = random_one_dim(rng, static_cast<int>(draw(rng, 1, 10)));
    if (t % 3 == 0) in.fixed = {static_cast<int>(draw(rng, 0, in.eta - 1))};
    const auto opt = exact_mkc(in);
    if (!opt) continue;
    FptasConfig cfg;
    cfg.epsilon = eps;
    FptasTrace trace;
    const MkcSolution sol = one_mkc_fptas(in, cfg, &trace);
    EXPECT_TRUE(check_solution(in, sol).empty());
    EXPECT_GE(sol.value, opt->value);
    const auto [lo, hi] = std::minmax_element(in.fbar.begin(), in.fbar.end());
    if (*lo > 0 && *hi <= in.eta * *lo) EXPECT_LE(sol.value, (1 + eps) * opt->value) << write_mkc_json(in);
    if (trace.scaled.lambda == 1) {
      EXPECT_EQ(sol.value, opt->value) << write_mkc_json(in);
      ++unscaled;
    }
  }
  EXPECT_GT(unscaled, 10);
}

INSTANTIATE_TEST_SUITE_P(Epsilons, OneMkcRatio, ::testing::Values(0, 1));

TEST(P1Fptas, SingleItemIsExact) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    GenConfig g{rng(), 1, 1, 20, Sense::Cover};
    const CoverInstance in = generate(g);
    FptasConfig cfg;
    cfg.epsilon = Rational(1, 2);
    EXPECT_EQ(p1_fptas(in, cfg).solution.value, exact_p(in)->value);
  }
}

TEST(P1Fptas, ZeroOptimumAndPreconditions) {
  CoverInstance in;
  in.n = 2;
  in.m = 1;
  in.f = {0, 0};
  in.v = {{0}, {0}};
  in.l = {{0}, {0}};
  in.c = {{3}, {3}};
  in.d = {3};
  const FptasOutcome out = p1_fptas(in, FptasConfig{});
  EXPECT_EQ(out.solution.value, 0);
  EXPECT_FALSE(out.hypothesis_holds);
  EXPECT_FALSE(out.warnings.empty());

  EXPECT_THROW(p1_fptas(generate({1, 3, 2, 5, Sense::Cover}), FptasConfig{}), PreconditionError);
  EXPECT_THROW(p1_fptas(generate({1, 3, 1, 5, Sense::Pack}), FptasConfig{}), PreconditionError);
}

TEST(P1Fptas, RatioAgainstExactOptimum) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 100; ++t) {
    const CoverInstance in = testing::random_cover(rng, 6, 1, Sense::Cover);
    const auto opt = exact_p(in);
    FptasConfig cfg;
    cfg.epsilon = Rational(1, 2);
    const FptasOutcome out = p1_fptas(in, cfg);
    EXPECT_TRUE(check_solution(in, out.solution).empty());
    EXPECT_GE(out.solution.value, opt->value);
    if (out.hypothesis_holds) EXPECT_LE(out.solution.value, Rational(3, 2) * opt->value) << write_json(in);
    if (out.unscaled) EXPECT_EQ(out.solution.value, opt->value) << write_json(in);
  }
}

TEST(P1Fptas, HypothesisFlag) {
  CoverInstance in;
  in.n = 2;
  in.m = 1;
  in.f = {10, 1};
  in.v = {{1}, {1}};
  in.l = {{0}, {0}};
  in.c = {{2}, {2}};
  in.d = {2};
  // f_max = 12, f_min = 1 > n = 2
  FptasOutcome out = p1_fptas(in, FptasConfig{});
  EXPECT_FALSE(out.hypothesis_holds);
  FptasConfig loose;
  loose.poly_eta = PolyEta::parse("const:12");
  out = p1_fptas(in, loose);
  EXPECT_TRUE(out.hypothesis_holds);
  EXPECT_TRUE(out.warnings.empty());
}

}  // namespace
}  // namespace covermip
