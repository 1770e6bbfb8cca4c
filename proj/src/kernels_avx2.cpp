#include <immintrin.h>

#include <algorithm>

#include "covermip/kernels.hpp"

namespace covermip::kernels {

void dp_row_avx2(const std::int64_t* prev, std::int64_t* out, std::uint8_t* take,
                 std::int64_t len, std::int64_t cost, std::int64_t weight) {
  const std::int64_t split = std::min(cost, len);
  std::copy(prev, prev + split, out);
  std::fill(take, take + split, std::uint8_t{0});

  const __m256i w = _mm256_set1_epi64x(weight);
  std::int64_t j = split;
  for (; j + 4 <= len; j += 4) {
    const __m256i keep = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev + j));
    const __m256i with = _mm256_add_epi64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev + j - cost)), w);
    const __m256i better = _mm256_cmpgt_epi64(with, keep);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j),
                        _mm256_blendv_epi8(keep, with, better));
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(better));
    take[j] = mask & 1;
    take[j + 1] = (mask >> 1) & 1;
    take[j + 2] = (mask >> 2) & 1;
    take[j + 3] = (mask >> 3) & 1;
  }
  for (; j < len; ++j) {
    const std::int64_t with = prev[j - cost] + weight;
    const bool better = with > prev[j];
    out[j] = better ? with : prev[j];
    take[j] = better ? 1 : 0;
  }
}

}  // namespace covermip::kernels
