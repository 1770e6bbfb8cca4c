#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

#include "covermip/formulation.hpp"
#include "covermip/instance.hpp"

namespace covermip::testing {

inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Seeded instance from the library generator with n, m and the coefficient
/// range drawn from `rng`.
inline CoverInstance random_cover(std::mt19937_64& rng, int max_n, int max_m, Sense sense) {
  static constexpr std::int64_t kRanges[] = {1, 2, 3, 5, 10, 20};
  GenConfig cfg;
  cfg.seed = rng();
  cfg.n = static_cast<int>(draw(rng, 1, max_n));
  cfg.m = static_cast<int>(draw(rng, 1, max_m));
  cfg.coeff_max = kRanges[draw(rng, 0, 5)];
  cfg.sense = sense;
  return generate(cfg);
}

/// One-dimensional knapsack cover with fbar, vbar >= 1, 1 <= w <= d,
/// 1 <= cbar <= d, fbar sorted descending.
inline MkcInstance random_one_mkc(std::mt19937_64& rng, int eta, std::int64_t coeff_max) {
  MkcInstance in;
  in.sense = Sense::Cover;
  in.eta = eta;
  in.mu = 1;
  const std::int64_t d = draw(rng, 1, coeff_max);
  in.dbar = {d};
  in.cbar = {draw(rng, 1, d)};
  in.vbar = {draw(rng, 1, coeff_max)};
  for (int i = 0; i < eta; ++i) {
    in.fbar.push_back(draw(rng, 1, coeff_max * 4));
    in.wbar.push_back({draw(rng, 1, d)});
  }
  std::sort(in.fbar.begin(), in.fbar.end(), std::greater<>());
  return in;
}

/// Feasible uniform instance with n items (d >= 1).
inline UniformInstance random_uniform(std::mt19937_64& rng, int n, std::int64_t coeff_max) {
  for (;;) {
    UniformInstance in;
    in.n = n;
    in.d = draw(rng, 1, coeff_max);
    in.cap = draw(rng, 1, in.d);
    in.ell = draw(rng, 0, in.cap);
    if (in.cap * n < in.d) continue;
    for (int i = 0; i < n; ++i) {
      in.v.push_back(draw(rng, 0, coeff_max));
      in.f.push_back(draw(rng, 0, coeff_max));
    }
    std::sort(in.v.begin(), in.v.end(), std::greater<>());
    return in;
  }
}

}  // namespace covermip::testing
