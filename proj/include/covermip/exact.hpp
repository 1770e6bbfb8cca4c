#pragma once

#include <optional>

#include "covermip/instance.hpp"

namespace covermip {

inline constexpr int kDefaultMkcCap = 20;
inline constexpr int kDefaultPCap = 16;

/// Exhaustive optimum of a knapsack cover/packing instance over all 2^eta
/// subsets (respecting fixed items). Ties keep the lexicographically
/// smallest sorted index list. nullopt when infeasible. Throws
/// CapExceeded when eta > cap.
std::optional<MkcSolution> exact_mkc(const MkcInstance& instance, int cap = kDefaultMkcCap);

/// Exhaustive optimum of the mixed program: enumerates y, fills x greedily
/// per constraint. nullopt when no y is feasible. Throws CapExceeded when
/// n > cap.
std::optional<MixedSolution> exact_p(const CoverInstance& instance, int cap = kDefaultPCap);

/// Best x for a fixed y (per-constraint greedy fill), nullopt if y admits
/// no feasible x.
std::optional<MixedSolution> best_x_for(const CoverInstance& instance,
                                        const std::vector<std::uint8_t>& y);

}  // namespace covermip
