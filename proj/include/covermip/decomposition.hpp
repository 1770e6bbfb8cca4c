#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "covermip/instance.hpp"

namespace covermip {

/// Pivot ("fractional") item per constraint, 0-based: g[j] in [0, n).
struct GChoice {
  std::vector<int> g;

  bool operator==(const GChoice&) const = default;
  auto operator<=>(const GChoice&) const = default;
};

/// Items fixed at their lower bound (L) and at their upper bound (C) for
/// pivot k in constraint j. {L, C, {k}} partitions the items.
struct LCPartition {
  std::vector<int> L;
  std::vector<int> C;
  int pivot = 0;
  int dim = 0;
};

inline constexpr std::uint64_t kDefaultGCap = 1'000'000;

LCPartition lc_partition(const CoverInstance& instance, int k, int j);

/// Knapsack subproblem for the pivot choice g. Pivot items land in
/// `fixed`; a dimension whose pivot has c = l gets cbar_j = 0. Use
/// is_feasible() to detect subproblems callers should skip.
MkcInstance build_mkc(const CoverInstance& instance, const GChoice& g);

/// n^m, saturating at UINT64_MAX.
std::uint64_t count_g(const CoverInstance& instance);

/// All n^m choices in lexicographic order. Throws CapExceeded above `cap`.
std::vector<GChoice> enumerate_g(const CoverInstance& instance, std::uint64_t cap = kDefaultGCap);

/// The index-th choice in lexicographic order.
GChoice g_at(const CoverInstance& instance, std::uint64_t index);

/// Maps a subproblem solution back to the original program. The value is
/// carried over exactly. Throws PreconditionError if `sub` is infeasible
/// for build_mkc(instance, g).
MixedSolution lift(const CoverInstance& instance, const GChoice& g, const MkcSolution& sub);

}  // namespace covermip
