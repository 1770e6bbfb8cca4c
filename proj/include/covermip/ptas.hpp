#pragma once

#include <cstdint>
#include <optional>

#include "covermip/decomposition.hpp"
#include "covermip/instance.hpp"

namespace covermip {

struct PtasConfig {
  Rational epsilon = 1;
  /// Guard on the number of enumerated subsets per knapsack instance.
  std::uint64_t subset_cap = 10'000'000;
  /// Guard on n^m for the outer loop.
  std::uint64_t g_cap = kDefaultGCap;
  int threads = 1;
};

/// Counters gathered while running the scheme; used by tests to check the
/// basic-solution property of every LP(S).
struct PtasStats {
  std::uint64_t subsets = 0;
  std::uint64_t lp_solves = 0;
  /// Largest number of free y-variables strictly inside (0, 1) seen in any
  /// LP(S) solution.
  int max_fractional = 0;
  /// LP(S) solutions with more fractional free y-variables than dimensions.
  std::uint64_t over_dimension = 0;

  void merge(const PtasStats& other);
};

/// Subset-enumeration scheme for knapsack cover: value <= (1 + eps) OPT.
/// Throws InfeasibleError for infeasible instances, CapExceeded when the
/// subset count exceeds cfg.subset_cap.
MkcSolution mkc_ptas(const MkcInstance& instance, const PtasConfig& cfg,
                     PtasStats* stats = nullptr);

/// Packing counterpart: value >= OPT / (1 + eps) (rounds LP solutions down).
MkcSolution mkp_ptas(const MkcInstance& instance, const PtasConfig& cfg,
                     PtasStats* stats = nullptr);

struct PtasOutcome {
  MixedSolution solution;
  /// Pivot choice of the winning subproblem; empty when the zero-optimum
  /// test answered directly or, for packing, only the empty selection fits.
  std::optional<GChoice> g;
  PtasStats stats;
};

/// Approximation scheme for the full program with fixed m: solves every
/// decomposition member and lifts the best. Cover: value <= (1+eps) OPT;
/// pack: value >= OPT / (1+eps).
PtasOutcome p_ptas(const CoverInstance& instance, const PtasConfig& cfg);

/// min{eta, ceil(mu / eps)}.
int subset_size_limit(int eta, int mu, const Rational& epsilon);

}  // namespace covermip
