#include "covermip/fptas.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "covermip/error.hpp"
#include "covermip/kernels.hpp"
#include "parallel.hpp"

namespace covermip {

PolyEta PolyEta::parse(std::string_view text) {
  if (text == "eta") return PolyEta{Kind::Eta, 1};
  if (text == "eta^2") return PolyEta{Kind::EtaSquared, 1};
  constexpr std::string_view prefix = "const:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    std::int64_t k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty() && k >= 1) {
      return PolyEta{Kind::Constant, k};
    }
  }
  throw ParseError("poly-eta must be 'eta', 'eta^2' or 'const:k' with k >= 1, got '" +
                   std::string(text) + "'");
}

std::string PolyEta::str() const {
  switch (kind) {
    case Kind::Eta:
      return "eta";
    case Kind::EtaSquared:
      return "eta^2";
    case Kind::Constant:
      break;
  }
  return "const:" + std::to_string(constant);
}

BigInt PolyEta::eval(int eta) const {
  switch (kind) {
    case Kind::Eta:
      return BigInt(eta);
    case Kind::EtaSquared:
      return BigInt(eta) * eta;
    case Kind::Constant:
      break;
  }
  return BigInt(static_cast<long>(constant));
}

ScaledCosts scale(const MkcInstance& in, const FptasConfig& cfg) {
  if (in.mu != 1) throw PreconditionError("scaling needs a one-dimensional instance");
  if (in.eta < 1) throw PreconditionError("scaling needs at least one item");
  if (cfg.epsilon <= 0) throw PreconditionError("epsilon must be positive");
  const BigInt poly = cfg.poly_eta.eval(in.eta);
  if (poly < 1) throw PreconditionError("poly(eta) must be at least 1");

  const std::int64_t f_max = *std::max_element(in.fbar.begin(), in.fbar.end());
  ScaledCosts out;
  out.lambda = cfg.epsilon * Rational(f_max) / Rational(BigInt(in.eta) * poly);
  if (out.lambda < 1) out.lambda = 1;
  out.f_prime.reserve(in.fbar.size());
  for (std::int64_t f : in.fbar) {
    const BigInt scaled = ceil_of(Rational(f) / out.lambda);
    out.f_prime.push_back(scaled.get_si());
  }
  out.v_prime = Rational(in.vbar[0]) / out.lambda;
  return out;
}

DpTable dp(const std::vector<std::int64_t>& costs, const std::vector<std::int64_t>& weights,
           std::uint64_t cap) {
  if (costs.size() != weights.size()) throw PreconditionError("costs and weights differ in size");
  std::int64_t total = 0;
  for (std::int64_t c : costs) {
    if (c < 0) throw PreconditionError("DP costs must be nonnegative");
    total += c;
  }
  for (std::int64_t w : weights) {
    if (w < 0) throw PreconditionError("DP weights must be nonnegative");
  }
  DpTable t;
  t.rows = static_cast<int>(costs.size()) + 1;
  t.columns = total + 1;
  const auto cells = static_cast<unsigned __int128>(t.rows) * static_cast<std::uint64_t>(t.columns);
  if (cells > cap) {
    throw CapExceeded("DP table of " + std::to_string(t.rows) + " x " + std::to_string(t.columns) +
                      " cells exceeds the cap of " + std::to_string(cap));
  }
  t.f_prime = costs;
  t.M.assign(static_cast<size_t>(cells), 0);
  t.take.assign(static_cast<size_t>(cells), 0);
  const auto row = kernels::dp_row();
  const auto width = static_cast<size_t>(t.columns);
  for (int i = 1; i < t.rows; ++i) {
    row(&t.M[(i - 1) * width], &t.M[i * width], &t.take[i * width], t.columns, costs[i - 1],
        weights[i - 1]);
  }
  return t;
}

MkcSolution one_mkc_fptas(const MkcInstance& in, const FptasConfig& cfg, FptasTrace* trace) {
  if (in.mu != 1) throw PreconditionError("one_mkc_fptas needs a one-dimensional instance");
  if (in.sense != Sense::Cover) throw PreconditionError("one_mkc_fptas needs a cover instance");
  if (auto violations = validate(in); !violations.empty()) {
    throw PreconditionError("invalid knapsack instance: " + violations.front().message);
  }
  if (!is_feasible(in)) throw InfeasibleError("knapsack instance is infeasible");

  FptasTrace local;
  local.scaled = scale(in, cfg);
  std::vector<std::uint8_t> fixed(static_cast<size_t>(in.eta), 0);
  for (int i : in.fixed) fixed[i] = 1;
  std::int64_t demand = in.dbar[0];
  std::vector<std::int64_t> costs;
  std::vector<std::int64_t> weights;
  for (int i = 0; i < in.eta; ++i) {
    if (fixed[i]) {
      demand -= in.wbar[i][0];
    } else {
      local.free_items.push_back(i);
      costs.push_back(local.scaled.f_prime[i]);
      weights.push_back(in.wbar[i][0]);
    }
  }
  local.residual_demand = demand;
  const std::int64_t cbar = in.cbar[0];

  const DpTable table = dp(costs, weights, cfg.table_cap);
  const int last = table.rows - 1;
  std::optional<Rational> q;
  for (std::int64_t j = table.columns - 1; j >= 0; --j) {
    const std::int64_t covered = table.at(last, j);
    if (covered < demand - cbar) break;  // M is nondecreasing in j
    const Rational value = Rational(j) + local.scaled.v_prime * std::max<std::int64_t>(demand - covered, 0);
    if (!q || value < *q) {
      q = value;
      local.best_level = j;
    }
  }
  local.q = *q;

  MkcSolution sol;
  sol.y.assign(static_cast<size_t>(in.eta), 0);
  for (int i : in.fixed) sol.y[i] = 1;
  std::int64_t j = local.best_level;
  for (int i = last; i >= 1; --i) {
    if (table.took(i, j)) {
      sol.y[local.free_items[i - 1]] = 1;
      j -= table.f_prime[i - 1];
    }
  }
  std::int64_t covered = 0;
  for (int i = 0; i < in.eta; ++i) {
    if (sol.y[i]) covered += in.wbar[i][0];
  }
  sol.alpha = {Rational(std::clamp<std::int64_t>(in.dbar[0] - covered, 0, cbar))};
  sol.value = evaluate(in, sol.y, sol.alpha);
  if (trace) *trace = std::move(local);
  return sol;
}

FptasOutcome p1_fptas(const CoverInstance& in, const FptasConfig& cfg) {
  if (auto violations = validate(in); !violations.empty()) {
    throw PreconditionError("invalid instance: " + violations.front().message);
  }
  if (in.m != 1) throw PreconditionError("the FPTAS needs exactly one constraint (m = 1)");
  if (in.sense != Sense::Cover) throw PreconditionError("the FPTAS supports cover instances only");
  if (cfg.epsilon <= 0) throw PreconditionError("epsilon must be positive");

  FptasOutcome out;
  std::int64_t f_max = 0;
  std::int64_t f_min = 0;
  for (int i = 0; i < in.n; ++i) {
    const std::int64_t hi = in.f[i] + in.c[i][0] * in.v[i][0];
    const std::int64_t lo = in.f[i] + in.l[i][0] * in.v[i][0];
    f_max = i == 0 ? hi : std::max(f_max, hi);
    f_min = i == 0 ? lo : std::min(f_min, lo);
  }
  const BigInt poly = cfg.poly_eta.eval(in.n);
  out.hypothesis_holds = f_min > 0 && BigInt(static_cast<long>(f_max)) <= poly * f_min;
  if (!out.hypothesis_holds) {
    const std::string ratio = f_min > 0 ? "f_max/f_min = " + std::to_string(f_max) + "/" + std::to_string(f_min) +
                                              " exceeds poly(n) = " + poly.get_str()
                                        : std::string("f_min = 0");
    out.warnings.push_back(ratio + "; the (1+eps) guarantee is not certified");
  }

  if (auto zero = zero_optimum(in)) {
    out.solution = std::move(*zero);
    return out;
  }

  struct Slot {
    std::optional<MkcSolution> sub;
    bool unscaled = true;
  };
  std::vector<Slot> slots(static_cast<size_t>(in.n));
  detail::parallel_for(static_cast<std::uint64_t>(in.n), cfg.threads, [&](std::uint64_t idx) {
    const MkcInstance mkc = build_mkc(in, GChoice{{static_cast<int>(idx)}});
    if (!is_feasible(mkc)) return;
    FptasTrace trace;
    slots[idx].sub = one_mkc_fptas(mkc, cfg, &trace);
    slots[idx].unscaled = trace.scaled.lambda == 1;
  });

  std::optional<int> winner;
  for (int idx = 0; idx < in.n; ++idx) {
    const auto& slot = slots[idx];
    if (!slot.sub) continue;
    out.unscaled = out.unscaled && slot.unscaled;
    if (!winner || slot.sub->value < slots[*winner].sub->value) winner = idx;
  }
  if (!winner) throw InfeasibleError("every decomposition member is infeasible");
  out.g = GChoice{{*winner}};
  out.solution = lift(in, *out.g, *slots[*winner].sub);
  return out;
}

}  // namespace covermip
