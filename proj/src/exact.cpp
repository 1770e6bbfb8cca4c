#include "covermip/exact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "covermip/error.hpp"

namespace covermip {
namespace {

bool better(Sense sense, const Rational& candidate, const Rational& incumbent) {
  return sense == Sense::Cover ? candidate < incumbent : candidate > incumbent;
}

// Lexicographic order of the sorted index lists of two subsets.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  const std::uint64_t above = ~((low << 1) - 1);
  // the set holding the first differing index is smaller iff the other one
  // continues past it
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

}  // namespace

std::optional<MkcSolution> exact_mkc(const MkcInstance& in, int cap) {
  if (in.eta > cap) {
    throw CapExceeded("exact_mkc: eta = " + std::to_string(in.eta) + " exceeds cap " +
                      std::to_string(cap));
  }
  std::uint64_t fixed_mask = 0;
  for (int item : in.fixed) fixed_mask |= std::uint64_t{1} << item;

  std::optional<MkcSolution> best;
  std::uint64_t best_mask = 0;
  std::vector<std::int64_t> load(static_cast<size_t>(in.mu));
  std::vector<Rational> alpha(static_cast<size_t>(in.mu));
  const std::uint64_t total = std::uint64_t{1} << in.eta;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if ((mask & fixed_mask) != fixed_mask) continue;
    std::fill(load.begin(), load.end(), 0);
    std::int64_t item_cost = 0;
    for (int i = 0; i < in.eta; ++i) {
      if (!(mask >> i & 1)) continue;
      item_cost += in.fbar[i];
      for (int j = 0; j < in.mu; ++j) load[j] += in.wbar[i][j];
    }
    bool feasible = true;
    Rational value = item_cost;
    for (int j = 0; j < in.mu && feasible; ++j) {
      const std::int64_t gap = in.dbar[j] - load[j];
      if (in.sense == Sense::Cover) {
        feasible = gap <= in.cbar[j];
        alpha[j] = std::max<std::int64_t>(gap, 0);
      } else {
        feasible = gap >= 0;
        alpha[j] = in.vbar[j] > 0 ? std::min(in.cbar[j], gap) : 0;
      }
      value += Rational(in.vbar[j]) * alpha[j];
    }
    if (!feasible) continue;
    if (!best || better(in.sense, value, best->value) ||
        (value == best->value && lex_less(mask, best_mask))) {
      best_mask = mask;
      MkcSolution s;
      s.y.assign(static_cast<size_t>(in.eta), 0);
      for (int i = 0; i < in.eta; ++i) s.y[i] = (mask >> i) & 1;
      s.alpha = alpha;
      s.value = value;
      best = std::move(s);
    }
  }
  return best;
}

std::optional<MixedSolution> best_x_for(const CoverInstance& in,
                                        const std::vector<std::uint8_t>& y) {
  MixedSolution s;
  s.y = y;
  s.x.assign(static_cast<size_t>(in.n), std::vector<Rational>(static_cast<size_t>(in.m), 0));
  std::vector<int> order(static_cast<size_t>(in.n));
  for (int j = 0; j < in.m; ++j) {
    std::int64_t floor_sum = 0;
    std::int64_t cap_sum = 0;
    for (int i = 0; i < in.n; ++i) {
      if (!y[i]) continue;
      floor_sum += in.l[i][j];
      cap_sum += in.c[i][j];
      s.x[i][j] = in.l[i][j];
    }
    std::iota(order.begin(), order.end(), 0);
    if (in.sense == Sense::Cover) {
      if (cap_sum < in.d[j]) return std::nullopt;
      // raise the cheapest flows first
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return in.v[a][j] < in.v[b][j]; });
      std::int64_t need = in.d[j] - floor_sum;
      for (int i : order) {
        if (need <= 0) break;
        if (!y[i]) continue;
        const std::int64_t add = std::min(need, in.c[i][j] - in.l[i][j]);
        s.x[i][j] += add;
        need -= add;
      }
    } else {
      if (floor_sum > in.d[j]) return std::nullopt;
      // fill the most valuable flows first
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return in.v[a][j] > in.v[b][j]; });
      std::int64_t room = in.d[j] - floor_sum;
      for (int i : order) {
        if (room <= 0) break;
        if (!y[i] || in.v[i][j] == 0) continue;
        const std::int64_t add = std::min(room, in.c[i][j] - in.l[i][j]);
        s.x[i][j] += add;
        room -= add;
      }
    }
  }
  s.value = evaluate(in, s.x, s.y);
  return s;
}

std::optional<MixedSolution> exact_p(const CoverInstance& in, int cap) {
  if (in.n > cap) {
    throw CapExceeded("exact_p: n = " + std::to_string(in.n) + " exceeds cap " +
                      std::to_string(cap));
  }
  std::optional<MixedSolution> best;
  std::vector<std::uint8_t> y(static_cast<size_t>(in.n));
  const std::uint64_t total = std::uint64_t{1} << in.n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < in.n; ++i) y[i] = (mask >> i) & 1;
    auto candidate = best_x_for(in, y);
    if (!candidate) continue;
    if (!best || better(in.sense, candidate->value, best->value)) best = std::move(candidate);
  }
  return best;
}

}  // namespace covermip
