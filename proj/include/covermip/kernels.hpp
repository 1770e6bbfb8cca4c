#pragma once

#include <cstdint>
#include <string_view>

namespace covermip::kernels {

/// One DP row of the 0/1 knapsack table:
///   out[j]  = max(prev[j], prev[j - cost] + weight)   for j >= cost
///   out[j]  = prev[j]                                  for j <  cost
///   take[j] = 1 iff the second term is strictly larger.
/// `prev`, `out` and `take` hold `len` entries; `out` must not alias `prev`.
using DpRowFn = void (*)(const std::int64_t* prev, std::int64_t* out, std::uint8_t* take,
                         std::int64_t len, std::int64_t cost, std::int64_t weight);

void dp_row_scalar(const std::int64_t* prev, std::int64_t* out, std::uint8_t* take,
                   std::int64_t len, std::int64_t cost, std::int64_t weight);

/// True when this build carries the AVX2 variant and the CPU supports it.
bool avx2_available();

/// Requires avx2_available().
void dp_row_avx2(const std::int64_t* prev, std::int64_t* out, std::uint8_t* take,
                 std::int64_t len, std::int64_t cost, std::int64_t weight);

/// Best variant for the running CPU, chosen once.
DpRowFn dp_row();

/// "avx2" or "scalar".
std::string_view active_variant();

}  // namespace covermip::kernels
