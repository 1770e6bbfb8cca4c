#include "covermip/ptas.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "covermip/error.hpp"
#include "covermip/lp.hpp"
#include "parallel.hpp"

namespace covermip {

void PtasStats::merge(const PtasStats& other) {
  subsets += other.subsets;
  lp_solves += other.lp_solves;
  max_fractional = std::max(max_fractional, other.max_fractional);
  over_dimension += other.over_dimension;
}

int subset_size_limit(int eta, int mu, const Rational& epsilon) {
  if (epsilon <= 0) throw PreconditionError("epsilon must be positive");
  const BigInt k = ceil_of(Rational(mu) / epsilon);
  if (k >= eta) return eta;
  return static_cast<int>(k.get_si());
}

namespace {

std::uint64_t binomial_sum(int n, int k, std::uint64_t cap) {
  // sum_{s<=k} C(n, s), saturating just above cap
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (int s = 0; s <= k; ++s) {
    total += term;
    if (total > cap) return cap + 1;
    // C(n, s+1) = C(n, s) * (n - s) / (s + 1); exact in integers
    const auto num = static_cast<unsigned __int128>(term) * static_cast<unsigned>(n - s);
    const auto next = num / static_cast<unsigned>(s + 1);
    if (next > cap) {
      term = cap + 1;
    } else {
      term = static_cast<std::uint64_t>(next);
    }
  }
  return total;
}

// Advances `comb` (sorted positions into a pool of size n) to the next
// combination of the same size in lex order. False when exhausted.
bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int t = i + 1; t < k; ++t) comb[t] = comb[t - 1] + 1;
  return true;
}

struct Candidate {
  std::vector<std::uint8_t> y;
  std::vector<Rational> alpha;
  Rational value;
};

MkcSolution run_scheme(const MkcInstance& in, const PtasConfig& cfg, PtasStats* stats) {
  if (auto violations = validate(in); !violations.empty()) {
    throw PreconditionError("invalid knapsack instance: " + violations.front().message);
  }
  if (!is_feasible(in)) throw InfeasibleError("knapsack instance is infeasible");
  const bool cover = in.sense == Sense::Cover;

  std::vector<std::uint8_t> is_fixed(static_cast<size_t>(in.eta), 0);
  for (int item : in.fixed) is_fixed[item] = 1;
  std::vector<int> pool;
  for (int i = 0; i < in.eta; ++i) {
    if (!is_fixed[i]) pool.push_back(i);
  }
  const int free_count = static_cast<int>(pool.size());
  const int k = subset_size_limit(free_count, in.mu, cfg.epsilon);
  if (binomial_sum(free_count, k, cfg.subset_cap) > cfg.subset_cap) {
    throw CapExceeded("subset enumeration exceeds cap of " + std::to_string(cfg.subset_cap));
  }

  PtasStats local;
  std::optional<Candidate> best;
  if (!cover && in.fixed.empty()) {
    // the empty selection with alpha = 0 is the starting incumbent
    best = Candidate{std::vector<std::uint8_t>(static_cast<size_t>(in.eta), 0),
                     std::vector<Rational>(static_cast<size_t>(in.mu), 0), Rational(0)};
  }

  // LP(S) skeleton; only the y bounds change between subsets.
  LinearModel lp;
  for (int i = 0; i < in.eta; ++i) {
    lp.add_variable("y" + std::to_string(i + 1), Rational(0), Rational(1));
  }
  for (int j = 0; j < in.mu; ++j) {
    lp.add_variable("alpha" + std::to_string(j + 1), Rational(0), Rational(in.cbar[j]));
  }
  for (int j = 0; j < in.mu; ++j) {
    Terms terms;
    for (int i = 0; i < in.eta; ++i) {
      if (in.wbar[i][j] != 0) terms.emplace_back(i, Rational(in.wbar[i][j]));
    }
    terms.emplace_back(in.eta + j, Rational(1));
    lp.add_constraint("dim" + std::to_string(j + 1), std::move(terms),
                      cover ? Relation::GreaterEqual : Relation::LessEqual, Rational(in.dbar[j]));
  }
  lp.objective.sense = cover ? ObjSense::Minimize : ObjSense::Maximize;
  for (int i = 0; i < in.eta; ++i) {
    if (in.fbar[i] != 0) lp.objective.terms.emplace_back(i, Rational(in.fbar[i]));
  }
  for (int j = 0; j < in.mu; ++j) {
    if (in.vbar[j] != 0) lp.objective.terms.emplace_back(in.eta + j, Rational(in.vbar[j]));
  }

  enum : std::uint8_t { kFree = 0, kInS = 1, kInT = 2 };
  std::vector<std::uint8_t> role(static_cast<size_t>(in.eta));
  std::vector<int> free_vars;

  for (int size = 0; size <= k; ++size) {
    std::vector<int> comb(static_cast<size_t>(size));
    for (int t = 0; t < size; ++t) comb[t] = t;
    do {
      ++local.subsets;
      std::fill(role.begin(), role.end(), kFree);
      for (int item : in.fixed) role[item] = kInS;
      std::int64_t min_cost = std::numeric_limits<std::int64_t>::max();
      for (int pos : comb) {
        role[pool[pos]] = kInS;
        min_cost = std::min(min_cost, in.fbar[pool[pos]]);
      }
      if (size > 0) {
        for (int item : pool) {
          if (role[item] == kFree && in.fbar[item] > min_cost) role[item] = kInT;
        }
      }

      bool passes = true;
      for (int j = 0; j < in.mu && passes; ++j) {
        std::int64_t in_s = 0;
        std::int64_t open = 0;
        for (int i = 0; i < in.eta; ++i) {
          if (role[i] == kInS) in_s += in.wbar[i][j];
          if (role[i] == kFree) open += in.wbar[i][j];
        }
        if (cover) {
          passes = open >= in.dbar[j] - in.cbar[j] - in_s;
        } else {
          passes = in.dbar[j] - in_s >= 0;
        }
      }
      if (!passes) continue;

      // S alone, when feasible, covers the case where S is an optimal set
      {
        Candidate plain;
        plain.y.assign(static_cast<size_t>(in.eta), 0);
        plain.alpha.resize(static_cast<size_t>(in.mu));
        plain.value = 0;
        for (int i = 0; i < in.eta; ++i) {
          if (role[i] == kInS) {
            plain.y[i] = 1;
            plain.value += in.fbar[i];
          }
        }
        bool ok = true;
        for (int j = 0; j < in.mu && ok; ++j) {
          std::int64_t load = 0;
          for (int i = 0; i < in.eta; ++i) {
            if (plain.y[i]) load += in.wbar[i][j];
          }
          if (cover) {
            ok = in.dbar[j] - load <= in.cbar[j];
            plain.alpha[j] = std::max<std::int64_t>(0, in.dbar[j] - load);
          } else {
            plain.alpha[j] = in.vbar[j] > 0 ? std::min(in.cbar[j], in.dbar[j] - load) : 0;
          }
          plain.value += Rational(in.vbar[j]) * plain.alpha[j];
        }
        if (ok && (!best || (cover ? plain.value < best->value : plain.value > best->value))) {
          best = std::move(plain);
        }
      }

      free_vars.clear();
      for (int i = 0; i < in.eta; ++i) {
        auto& var = lp.vars[i];
        switch (role[i]) {
          case kInS:
            var.lower = Rational(1);
            var.upper = Rational(1);
            break;
          case kInT:
            var.lower = Rational(0);
            var.upper = Rational(0);
            break;
          default:
            var.lower = Rational(0);
            var.upper = Rational(1);
            free_vars.push_back(i);
        }
      }
      const LpResult res = solve(lp);
      ++local.lp_solves;
      if (res.status != LpStatus::Optimal) {
        throw Error("LP(S) not optimal after passing the feasibility filter");
      }
      const int fractional = count_fractional(lp, res, free_vars);
      local.max_fractional = std::max(local.max_fractional, fractional);
      if (fractional > in.mu) ++local.over_dimension;

      Candidate cand;
      cand.y.resize(static_cast<size_t>(in.eta));
      for (int i = 0; i < in.eta; ++i) {
        const Rational& yi = res.values[i];
        cand.y[i] = cover ? (yi > 0 ? 1 : 0) : (yi == 1 ? 1 : 0);
      }
      cand.alpha.resize(static_cast<size_t>(in.mu));
      cand.value = 0;
      for (int i = 0; i < in.eta; ++i) {
        if (cand.y[i]) cand.value += in.fbar[i];
      }
      for (int j = 0; j < in.mu; ++j) {
        std::int64_t load = 0;
        for (int i = 0; i < in.eta; ++i) {
          if (cand.y[i]) load += in.wbar[i][j];
        }
        const Rational& lp_alpha = res.values[in.eta + j];
        if (cover) {
          // rounding up only added weight, so this never exceeds the LP value
          cand.alpha[j] = std::max<std::int64_t>(0, in.dbar[j] - load);
        } else if (in.vbar[j] > 0) {
          // rounding down only freed capacity, so this never drops below it
          cand.alpha[j] = std::min(in.cbar[j], in.dbar[j] - load);
        } else {
          cand.alpha[j] = lp_alpha;
        }
        cand.value += Rational(in.vbar[j]) * cand.alpha[j];
      }
      const bool improves =
          !best || (cover ? cand.value < best->value : cand.value > best->value);
      if (improves) best = std::move(cand);
    } while (next_combination(comb, free_count));
  }

  if (stats) stats->merge(local);
  if (!best) throw InfeasibleError("no subset passed the feasibility filter");
  return MkcSolution{std::move(best->y), std::move(best->alpha), std::move(best->value)};
}

}  // namespace

MkcSolution mkc_ptas(const MkcInstance& in, const PtasConfig& cfg, PtasStats* stats) {
  if (in.sense != Sense::Cover) throw PreconditionError("mkc_ptas requires a cover instance");
  return run_scheme(in, cfg, stats);
}

MkcSolution mkp_ptas(const MkcInstance& in, const PtasConfig& cfg, PtasStats* stats) {
  if (in.sense != Sense::Pack) throw PreconditionError("mkp_ptas requires a pack instance");
  return run_scheme(in, cfg, stats);
}

PtasOutcome p_ptas(const CoverInstance& in, const PtasConfig& cfg) {
  if (auto violations = validate(in); !violations.empty()) {
    throw PreconditionError("invalid instance: " + violations.front().message);
  }
  if (cfg.epsilon <= 0) throw PreconditionError("epsilon must be positive");
  PtasOutcome out;
  if (in.sense == Sense::Cover) {
    if (auto zero = zero_optimum(in)) {
      out.solution = std::move(*zero);
      return out;
    }
  }
  const std::uint64_t total = count_g(in);
  if (total > cfg.g_cap) {
    throw CapExceeded("n^m = " + std::to_string(total) + " pivot choices exceed the cap of " +
                      std::to_string(cfg.g_cap));
  }

  struct Slot {
    std::optional<MkcSolution> sub;
    PtasStats stats;
  };
  std::vector<Slot> slots(static_cast<size_t>(total));
  detail::parallel_for(total, cfg.threads, [&](std::uint64_t idx) {
    const GChoice g = g_at(in, idx);
    const MkcInstance mkc = build_mkc(in, g);
    if (!is_feasible(mkc)) return;
    auto& slot = slots[idx];
    slot.sub = in.sense == Sense::Cover ? mkc_ptas(mkc, cfg, &slot.stats)
                                        : mkp_ptas(mkc, cfg, &slot.stats);
  });

  std::optional<std::uint64_t> winner;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto& slot = slots[idx];
    out.stats.merge(slot.stats);
    if (!slot.sub) continue;
    if (!winner) {
      winner = idx;
      continue;
    }
    const Rational& incumbent = slots[*winner].sub->value;
    const bool improves = in.sense == Sense::Cover ? slot.sub->value < incumbent
                                                   : slot.sub->value > incumbent;
    if (improves) winner = idx;
  }
  if (!winner) {
    if (in.sense == Sense::Cover) throw InfeasibleError("every decomposition member is infeasible");
    // packing: nothing but the empty selection fits
    out.solution.y.assign(static_cast<size_t>(in.n), 0);
    out.solution.x.assign(static_cast<size_t>(in.n), std::vector<Rational>(static_cast<size_t>(in.m)));
    out.solution.value = 0;
    return out;
  }
  out.g = g_at(in, *winner);
  out.solution = lift(in, *out.g, *slots[*winner].sub);
  return out;
}

}  // namespace covermip
