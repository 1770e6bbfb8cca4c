#include "oracles.hpp"

#include <algorithm>

namespace covermip::testing {

namespace {

// Best cost of constraint j for fixed y: every x vertex with at most one
// item strictly inside [l y, c y]. Cover minimizes, pack maximizes.
std::optional<Rational> best_dimension(const CoverInstance& in, const std::vector<int>& on, int j) {
  const bool cover = in.sense == Sense::Cover;
  const int k = static_cast<int>(on.size());
  std::optional<Rational> best;
  const auto consider = [&](const Rational& cost) {
    if (!best || (cover ? cost < *best : cost > *best)) best = cost;
  };
  for (int free = -1; free < k; ++free) {
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      Rational load = 0;
      Rational cost = 0;
      for (int t = 0; t < k; ++t) {
        if (t == free) continue;
        const int i = on[t];
        const std::int64_t x = (mask >> t & 1) ? in.c[i][j] : in.l[i][j];
        load += x;
        cost += Rational(in.v[i][j] * x);
      }
      if (free < 0) {
        if (cover ? load >= in.d[j] : load <= in.d[j]) consider(cost);
        continue;
      }
      const int i = on[free];
      // put the free item exactly on the demand line when its box allows
      const Rational x = Rational(in.d[j]) - load;
      if (x >= in.l[i][j] && x <= in.c[i][j]) consider(cost + Rational(in.v[i][j]) * x);
    }
  }
  return best;
}

}  // namespace

std::optional<Rational> brute_force_p(const CoverInstance& in) {
  const bool cover = in.sense == Sense::Cover;
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << in.n); ++mask) {
    std::vector<int> on;
    Rational value = 0;
    for (int i = 0; i < in.n; ++i) {
      if (mask >> i & 1) {
        on.push_back(i);
        value += in.f[i];
      }
    }
    bool ok = true;
    for (int j = 0; j < in.m && ok; ++j) {
      auto dim = best_dimension(in, on, j);
      if (!dim) {
        ok = false;
      } else {
        value += *dim;
      }
    }
    if (ok && (!best || (cover ? value < *best : value > *best))) best = value;
  }
  return best;
}

std::optional<Rational> brute_force_mkc(const MkcInstance& in) {
  const bool cover = in.sense == Sense::Cover;
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << in.eta); ++mask) {
    bool ok = true;
    for (int i : in.fixed) ok = ok && (mask >> i & 1);
    if (!ok) continue;
    Rational value = 0;
    for (int i = 0; i < in.eta; ++i) {
      if (mask >> i & 1) value += in.fbar[i];
    }
    for (int j = 0; j < in.mu && ok; ++j) {
      std::int64_t load = 0;
      for (int i = 0; i < in.eta; ++i) {
        if (mask >> i & 1) load += in.wbar[i][j];
      }
      // alpha range [lo, hi] that keeps the row feasible
      std::int64_t lo = 0;
      std::int64_t hi = in.cbar[j];
      if (cover) {
        lo = std::max<std::int64_t>(lo, in.dbar[j] - load);
      } else {
        hi = std::min<std::int64_t>(hi, in.dbar[j] - load);
      }
      if (lo > hi) {
        ok = false;
        break;
      }
      const std::int64_t alpha = (cover ? in.vbar[j] >= 0 : in.vbar[j] <= 0) ? lo : hi;
      value += Rational(in.vbar[j] * alpha);
    }
    if (ok && (!best || (cover ? value < *best : value > *best))) best = value;
  }
  return best;
}

std::int64_t brute_force_knapsack(const std::vector<std::int64_t>& costs,
                                  const std::vector<std::int64_t>& weights, int items,
                                  std::int64_t budget) {
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << items); ++mask) {
    std::int64_t cost = 0;
    std::int64_t weight = 0;
    for (int i = 0; i < items; ++i) {
      if (mask >> i & 1) {
        cost += costs[i];
        weight += weights[i];
      }
    }
    if (cost <= budget) best = std::max(best, weight);
  }
  return best;
}

namespace {

// Solves A x = b exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Rational> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

std::optional<Rational> vertex_enumeration(const LinearModel& model) {
  const int n = model.num_vars();
  // every row as a . x <= b
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  const auto push = [&](std::vector<Rational> a, Rational b) {
    rows.push_back(std::move(a));
    rhs.push_back(std::move(b));
  };
  for (const auto& c : model.constraints) {
    std::vector<Rational> a(static_cast<size_t>(n), 0);
    for (const auto& [var, coef] : c.terms) a[var] += coef;
    if (c.relation != Relation::GreaterEqual) push(a, c.rhs);
    if (c.relation != Relation::LessEqual) {
      for (auto& q : a) q = -q;
      push(a, -c.rhs);
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> a(static_cast<size_t>(n), 0);
    a[i] = 1;
    push(a, *model.vars[i].upper);
    a[i] = -1;
    push(a, -*model.vars[i].lower);
  }
  const int total = static_cast<int>(rows.size());
  std::vector<Rational> cost(static_cast<size_t>(n), 0);
  for (const auto& [var, coef] : model.objective.terms) cost[var] += coef;
  const bool minimize = model.objective.sense == ObjSense::Minimize;

  std::optional<Rational> best;
  std::vector<int> pick(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) pick[t] = t;
  if (n > total) return best;
  for (;;) {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int r : pick) {
      a.push_back(rows[r]);
      b.push_back(rhs[r]);
    }
    if (auto x = solve_square(a, b)) {
      bool feasible = true;
      for (int r = 0; r < total && feasible; ++r) {
        Rational lhs = 0;
        for (int i = 0; i < n; ++i) lhs += rows[r][i] * (*x)[i];
        feasible = lhs <= rhs[r];
      }
      if (feasible) {
        Rational value = model.objective.constant;
        for (int i = 0; i < n; ++i) value += cost[i] * (*x)[i];
        if (!best || (minimize ? value < *best : value > *best)) best = value;
      }
    }
    int i = n - 1;
    while (i >= 0 && pick[i] == total - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int t = i + 1; t < n; ++t) pick[t] = pick[t - 1] + 1;
  }
  return best;
}

Rational hull_y_enumeration(const Rational& delta, const Rational& sigma, const Rational& a,
                            const std::vector<Rational>& b) {
  const int nu = static_cast<int>(b.size());
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << nu); ++mask) {
    Rational count = 0;
    Rational value = 0;
    for (int i = 0; i < nu; ++i) {
      if (mask >> i & 1) {
        count += 1;
        value += b[i];
      }
    }
    Rational lo = delta - count;
    if (lo < 0) lo = 0;
    if (lo > sigma) continue;
    value += a * (a >= 0 ? lo : sigma);
    if (!best || value < *best) best = value;
  }
  return *best;
}

}  // namespace covermip::testing
