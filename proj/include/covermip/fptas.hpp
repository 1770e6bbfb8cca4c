#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covermip/decomposition.hpp"
#include "covermip/instance.hpp"

namespace covermip {

/// Polynomial in eta that bounds f_max / f_min in the FPTAS hypothesis.
struct PolyEta {
  enum class Kind { Eta, EtaSquared, Constant };
  Kind kind = Kind::Eta;
  std::int64_t constant = 1;

  /// Accepts "eta", "eta^2" or "const:k" with k >= 1. Throws ParseError.
  static PolyEta parse(std::string_view text);
  std::string str() const;
  BigInt eval(int eta) const;
};

struct FptasConfig {
  Rational epsilon = 1;
  PolyEta poly_eta;
  /// Largest DP table (rows * columns) allowed.
  std::uint64_t table_cap = 200'000'000;
  int threads = 1;
};

struct ScaledCosts {
  Rational lambda;
  std::vector<std::int64_t> f_prime;
  Rational v_prime;
};

/// lambda = max{eps * f_max / (eta * poly(eta)), 1}, f' = ceil(fbar / lambda),
/// v' = vbar / lambda. Requires mu = 1.
ScaledCosts scale(const MkcInstance& instance, const FptasConfig& cfg);

/// M(i, j): largest weight of a subset of the first i items with cost <= j.
struct DpTable {
  int rows = 0;              // items + 1
  std::int64_t columns = 0;  // total cost + 1
  std::vector<std::int64_t> M;
  /// take[i * columns + j] = 1 when M(i, j) uses item i (1-based row).
  std::vector<std::uint8_t> take;
  std::vector<std::int64_t> f_prime;

  std::int64_t at(int i, std::int64_t j) const {
    return M[static_cast<size_t>(i) * static_cast<size_t>(columns) + static_cast<size_t>(j)];
  }
  bool took(int i, std::int64_t j) const {
    return take[static_cast<size_t>(i) * static_cast<size_t>(columns) + static_cast<size_t>(j)] != 0;
  }
};

/// Fills the table for nonnegative integer costs and weights. Throws
/// CapExceeded when rows * columns exceeds `cap`.
DpTable dp(const std::vector<std::int64_t>& costs, const std::vector<std::int64_t>& weights,
           std::uint64_t cap = FptasConfig{}.table_cap);

/// Details of a one_mkc_fptas run, exposed for tests.
struct FptasTrace {
  ScaledCosts scaled;
  /// Free (non-fixed) items in DP row order.
  std::vector<int> free_items;
  /// Demand left after the fixed items.
  std::int64_t residual_demand = 0;
  std::int64_t best_level = 0;
  /// Scaled objective at best_level.
  Rational q;
};

/// Cost-scaling dynamic program for the one-dimensional knapsack cover.
/// Exact when lambda = 1. Throws InfeasibleError for infeasible input.
MkcSolution one_mkc_fptas(const MkcInstance& instance, const FptasConfig& cfg,
                          FptasTrace* trace = nullptr);

struct FptasOutcome {
  MixedSolution solution;
  std::optional<GChoice> g;
  /// f_max / f_min <= poly(n) holds, so the (1 + eps) bound is certified.
  bool hypothesis_holds = false;
  /// Every solved subproblem had lambda = 1 (the result is optimal).
  bool unscaled = true;
  std::vector<std::string> warnings;
};

/// FPTAS for the single-constraint covering program.
FptasOutcome p1_fptas(const CoverInstance& instance, const FptasConfig& cfg);

}  // namespace covermip
