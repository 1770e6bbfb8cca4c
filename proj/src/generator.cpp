#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "covermip/error.hpp"
#include "covermip/instance.hpp"

namespace covermip {
namespace {

// Uniform draw in [lo, hi] from raw engine output. std::uniform_int_distribution
// is implementation-defined, which would make instances differ across
// standard libraries.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

}  // namespace

CoverInstance generate(const GenConfig& cfg) {
  if (cfg.coeff_max < 1 || cfg.coeff_max > kMaxCoefficient) {
    throw PreconditionError("coeff_max must lie in [1, " + std::to_string(kMaxCoefficient) + "]");
  }
  if (cfg.n < 1 || cfg.m < 1) throw PreconditionError("n and m must be positive");

  std::mt19937_64 rng(cfg.seed);
  CoverInstance in;
  in.sense = cfg.sense;
  in.n = cfg.n;
  in.m = cfg.m;
  in.v.assign(cfg.n, IntVector(cfg.m));
  in.l.assign(cfg.n, IntVector(cfg.m));
  in.c.assign(cfg.n, IntVector(cfg.m));
  in.d.assign(cfg.m, 0);
  in.f.assign(cfg.n, 0);

  for (int j = 0; j < cfg.m; ++j) {
    in.d[j] = draw(rng, 0, cfg.coeff_max);
    for (int i = 0; i < cfg.n; ++i) {
      in.c[i][j] = draw(rng, 0, in.d[j]);
      in.l[i][j] = draw(rng, 0, in.c[i][j]);
      in.v[i][j] = draw(rng, 0, cfg.coeff_max);
    }
  }
  for (int i = 0; i < cfg.n; ++i) in.f[i] = draw(rng, 0, cfg.coeff_max);

  if (cfg.sense == Sense::Cover) {
    for (int j = 0; j < cfg.m; ++j) {
      std::int64_t total = 0;
      std::int64_t largest = 0;
      for (int i = 0; i < cfg.n; ++i) {
        total += in.c[i][j];
        largest = std::max(largest, in.c[i][j]);
      }
      if (total < in.d[j]) in.d[j] = draw(rng, largest, total);
    }
  }
  return in;
}

}  // namespace covermip
