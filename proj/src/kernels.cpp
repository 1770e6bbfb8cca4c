#include "covermip/kernels.hpp"

#include <algorithm>

namespace covermip::kernels {

void dp_row_scalar(const std::int64_t* prev, std::int64_t* out, std::uint8_t* take,
                   std::int64_t len, std::int64_t cost, std::int64_t weight) {
  const std::int64_t split = std::min(cost, len);
  for (std::int64_t j = 0; j < split; ++j) {
    out[j] = prev[j];
    take[j] = 0;
  }
  for (std::int64_t j = split; j < len; ++j) {
    const std::int64_t with = prev[j - cost] + weight;
    const bool better = with > prev[j];
    out[j] = better ? with : prev[j];
    take[j] = better ? 1 : 0;
  }
}

#if !defined(COVERMIP_HAVE_AVX2)
bool avx2_available() { return false; }

void dp_row_avx2(const std::int64_t* prev, std::int64_t* out, std::uint8_t* take,
                 std::int64_t len, std::int64_t cost, std::int64_t weight) {
  dp_row_scalar(prev, out, take, len, cost, weight);
}
#else
bool avx2_available() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
}
#endif

DpRowFn dp_row() {
  static const DpRowFn chosen = avx2_available() ? &dp_row_avx2 : &dp_row_scalar;
  return chosen;
}

std::string_view active_variant() { return avx2_available() ? "avx2" : "scalar"; }

}  // namespace covermip::kernels
