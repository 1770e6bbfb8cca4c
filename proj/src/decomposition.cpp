#include "covermip/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "covermip/error.hpp"

namespace covermip {
namespace {

// True when item i sits at its lower bound for pivot k in column j.
bool in_lower_set(const CoverInstance& in, int i, int k, int j) {
  const auto vi = in.v[i][j];
  const auto vk = in.v[k][j];
  if (in.sense == Sense::Cover) return vi > vk || (vi == vk && i < k);
  return vi < vk || (vi == vk && i > k);
}

void check_g(const CoverInstance& in, const GChoice& g) {
  if (static_cast<int>(g.g.size()) != in.m) throw PreconditionError("g must have m entries");
  for (int k : g.g) {
    if (k < 0 || k >= in.n) throw PreconditionError("g entry out of range");
  }
}

// w^g_ij: the amount item i contributes to constraint j when selected.
std::int64_t weight(const CoverInstance& in, int i, int k, int j) {
  if (i == k) return in.l[k][j];
  return in_lower_set(in, i, k, j) ? in.l[i][j] : in.c[i][j];
}

}  // namespace

LCPartition lc_partition(const CoverInstance& in, int k, int j) {
  if (k < 0 || k >= in.n || j < 0 || j >= in.m) throw PreconditionError("lc_partition: bad index");
  LCPartition p;
  p.pivot = k;
  p.dim = j;
  for (int i = 0; i < in.n; ++i) {
    if (i == k) continue;
    (in_lower_set(in, i, k, j) ? p.L : p.C).push_back(i);
  }
  return p;
}

MkcInstance build_mkc(const CoverInstance& in, const GChoice& g) {
  check_g(in, g);
  MkcInstance out;
  out.sense = in.sense;
  out.eta = in.n;
  out.mu = in.m;
  out.wbar.assign(in.n, IntVector(in.m, 0));
  out.fbar = in.f;
  out.vbar.resize(in.m);
  out.cbar.resize(in.m);
  out.dbar = in.d;
  for (int j = 0; j < in.m; ++j) {
    const int k = g.g[j];
    out.vbar[j] = in.v[k][j];
    out.cbar[j] = in.c[k][j] - in.l[k][j];
    for (int i = 0; i < in.n; ++i) {
      out.wbar[i][j] = weight(in, i, k, j);
      out.fbar[i] += in.v[i][j] * out.wbar[i][j];
    }
  }
  out.fixed = g.g;
  std::sort(out.fixed.begin(), out.fixed.end());
  out.fixed.erase(std::unique(out.fixed.begin(), out.fixed.end()), out.fixed.end());
  return out;
}

std::uint64_t count_g(const CoverInstance& in) {
  std::uint64_t total = 1;
  for (int j = 0; j < in.m; ++j) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(in.n)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= static_cast<std::uint64_t>(in.n);
  }
  return total;
}

GChoice g_at(const CoverInstance& in, std::uint64_t index) {
  GChoice g;
  g.g.assign(in.m, 0);
  for (int j = in.m - 1; j >= 0; --j) {
    g.g[j] = static_cast<int>(index % static_cast<std::uint64_t>(in.n));
    index /= static_cast<std::uint64_t>(in.n);
  }
  return g;
}

std::vector<GChoice> enumerate_g(const CoverInstance& in, std::uint64_t cap) {
  const std::uint64_t total = count_g(in);
  if (total > cap) {
    throw CapExceeded("n^m = " + (total == std::numeric_limits<std::uint64_t>::max()
                                      ? std::string("overflow")
                                      : std::to_string(total)) +
                      " pivot choices exceed the cap of " + std::to_string(cap));
  }
  std::vector<GChoice> out;
  out.reserve(total);
  GChoice g;
  g.g.assign(in.m, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    out.push_back(g);
    for (int j = in.m - 1; j >= 0; --j) {
      if (++g.g[j] < in.n) break;
      g.g[j] = 0;
    }
  }
  return out;
}

MixedSolution lift(const CoverInstance& in, const GChoice& g, const MkcSolution& sub) {
  check_g(in, g);
  const MkcInstance mkc = build_mkc(in, g);
  if (auto problems = check_solution(mkc, sub); !problems.empty()) {
    throw PreconditionError("lift: subproblem solution infeasible: " + problems.front());
  }
  MixedSolution out;
  out.y = sub.y;
  out.x.assign(in.n, std::vector<Rational>(in.m, 0));
  for (int j = 0; j < in.m; ++j) {
    const int k = g.g[j];
    for (int i = 0; i < in.n; ++i) {
      if (i == k) {
        out.x[i][j] = sub.alpha[j] + in.l[k][j];
      } else if (sub.y[i]) {
        out.x[i][j] = in_lower_set(in, i, k, j) ? in.l[i][j] : in.c[i][j];
      }
    }
  }
  out.value = sub.value;
  return out;
}

}  // namespace covermip
