#include <algorithm>
#include <limits>
#include <string>

#include "covermip/error.hpp"
#include "covermip/lp.hpp"

namespace covermip {

int LinearModel::add_variable(std::string name, std::optional<Rational> lower,
                              std::optional<Rational> upper, VarKind kind) {
  vars.push_back({std::move(name), std::move(lower), std::move(upper), kind});
  return static_cast<int>(vars.size()) - 1;
}

void LinearModel::add_constraint(std::string name, Terms terms, Relation relation, Rational rhs) {
  constraints.push_back({std::move(name), std::move(terms), relation, std::move(rhs)});
}

namespace {

void check_terms(const Terms& terms, int nvars, const std::string& where) {
  std::vector<int> seen;
  seen.reserve(terms.size());
  for (const auto& [idx, coeff] : terms) {
    if (idx < 0 || idx >= nvars) {
      throw PreconditionError(where + ": variable index " + std::to_string(idx) + " out of range");
    }
    seen.push_back(idx);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw PreconditionError(where + ": duplicate variable in term list");
  }
}

}  // namespace

void check_model(const LinearModel& model) {
  const int n = model.num_vars();
  for (const auto& var : model.vars) {
    if (var.lower && var.upper && *var.lower > *var.upper) {
      throw PreconditionError("variable " + var.name + " has crossed bounds");
    }
    if (var.kind == VarKind::Binary &&
        ((var.lower && *var.lower < 0) || (var.upper && *var.upper > 1) || !var.lower ||
         !var.upper)) {
      throw PreconditionError("binary variable " + var.name + " must have bounds within [0, 1]");
    }
  }
  for (const auto& row : model.constraints) check_terms(row.terms, n, "constraint " + row.name);
  check_terms(model.objective.terms, n, "objective");
}

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

struct SimplexSolver::Impl {
  static constexpr int kArtificial = -1;
  static constexpr int kDegenerateRunLimit = 50;

  // Model mapping. A free model variable is split into pos - neg.
  int num_model_vars = 0;
  std::vector<int> pos_col;
  std::vector<int> neg_col;  // -1 unless split
  std::vector<int> col_model_var;  // -1 for slack columns

  int rows = 0;
  int cols = 0;  // structural + slack
  std::vector<std::optional<Rational>> lo, hi;
  std::vector<std::vector<Rational>> tab;
  std::vector<Rational> x;  // current value per column
  std::vector<int> basis;   // column per row, kArtificial for an artificial
  std::vector<Rational> art_value;
  std::vector<char> is_basic;
  std::vector<Rational> cost;
  Rational cost_constant;
  ObjSense sense = ObjSense::Minimize;
  std::vector<Rational> reduced;
  PricingRule rule;

  enum class Phase { Fresh, Feasible, Infeasible } phase = Phase::Fresh;
  int pivots = 0;

  Impl(const LinearModel& model, PricingRule r) : rule(r) {
    check_model(model);
    num_model_vars = model.num_vars();
    rows = model.num_constraints();
    pos_col.resize(num_model_vars);
    neg_col.assign(num_model_vars, -1);
    for (int i = 0; i < num_model_vars; ++i) {
      const auto& var = model.vars[i];
      pos_col[i] = static_cast<int>(lo.size());
      col_model_var.push_back(i);
      if (!var.lower && !var.upper) {
        lo.emplace_back(Rational(0));
        hi.emplace_back(std::nullopt);
        neg_col[i] = static_cast<int>(lo.size());
        col_model_var.push_back(i);
        lo.emplace_back(Rational(0));
        hi.emplace_back(std::nullopt);
      } else {
        lo.push_back(var.lower);
        hi.push_back(var.upper);
      }
    }
    const int structural = static_cast<int>(lo.size());
    for (const auto& row : model.constraints) {
      col_model_var.push_back(-1);
      switch (row.relation) {
        case Relation::LessEqual:
          lo.emplace_back(Rational(0));
          hi.emplace_back(std::nullopt);
          break;
        case Relation::GreaterEqual:
          lo.emplace_back(std::nullopt);
          hi.emplace_back(Rational(0));
          break;
        case Relation::Equal:
          lo.emplace_back(Rational(0));
          hi.emplace_back(Rational(0));
          break;
      }
    }
    cols = static_cast<int>(lo.size());

    x.assign(cols, 0);
    for (int j = 0; j < cols; ++j) {
      if (lo[j]) {
        x[j] = *lo[j];
      } else if (hi[j]) {
        x[j] = *hi[j];
      }
    }

    tab.assign(rows, std::vector<Rational>(cols));
    basis.assign(rows, kArtificial);
    art_value.assign(rows, 0);
    is_basic.assign(cols, 0);
    for (int r = 0; r < rows; ++r) {
      const auto& row = model.constraints[r];
      auto& t = tab[r];
      for (const auto& [idx, coeff] : row.terms) {
        t[pos_col[idx]] = coeff;
        if (neg_col[idx] >= 0) t[neg_col[idx]] = -coeff;
      }
      const int slack = structural + r;
      t[slack] = 1;
      Rational residual = row.rhs;
      for (int j = 0; j < structural; ++j) {
        if (sgn(t[j]) != 0) residual -= t[j] * x[j];
      }
      // Start the slack in the basis when it can absorb the residual.
      const bool slack_ok = (!lo[slack] || residual >= *lo[slack]) &&
                            (!hi[slack] || residual <= *hi[slack]);
      if (slack_ok) {
        basis[r] = slack;
        is_basic[slack] = 1;
        x[slack] = residual;
      } else {
        if (residual < 0) {
          for (auto& e : t) {
            if (sgn(e) != 0) e = -e;
          }
        }
        art_value[r] = abs(residual);
      }
    }
    set_objective(model.objective);
  }

  void set_objective(const Objective& obj) {
    sense = obj.sense;
    cost.assign(cols, 0);
    cost_constant = obj.constant;
    for (const auto& [idx, coeff] : obj.terms) {
      if (idx < 0 || idx >= num_model_vars) throw PreconditionError("objective index out of range");
      Rational c = sense == ObjSense::Minimize ? coeff : Rational(-coeff);
      cost[pos_col[idx]] = c;
      if (neg_col[idx] >= 0) cost[neg_col[idx]] = -c;
    }
  }

  bool fixed(int j) const { return lo[j] && hi[j] && *lo[j] == *hi[j]; }
  bool can_increase(int j) const { return !hi[j] || x[j] < *hi[j]; }
  bool can_decrease(int j) const { return !lo[j] || x[j] > *lo[j]; }

  // Direction +1/-1 if column j is an improving candidate, else 0.
  int improving_direction(int j) const {
    if (is_basic[j] || fixed(j)) return 0;
    const int s = sgn(reduced[j]);
    if (s < 0 && can_increase(j)) return +1;
    if (s > 0 && can_decrease(j)) return -1;
    return 0;
  }

  int choose_entering(bool use_bland) const {
    int best = -1;
    for (int j = 0; j < cols; ++j) {
      if (improving_direction(j) == 0) continue;
      if (use_bland) return j;
      if (best < 0 || abs(reduced[j]) > abs(reduced[best])) best = j;
    }
    return best;
  }

  void pivot(int r, int j) {
    auto& prow = tab[r];
    const Rational inv = 1 / prow[j];
    std::vector<int> nz;
    for (int k = 0; k < cols; ++k) {
      if (sgn(prow[k]) != 0) {
        prow[k] *= inv;
        nz.push_back(k);
      }
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto& row = tab[i];
      if (sgn(row[j]) == 0) continue;
      const Rational factor = row[j];
      for (int k : nz) row[k] -= factor * prow[k];
    }
    if (sgn(reduced[j]) != 0) {
      const Rational factor = reduced[j];
      for (int k : nz) reduced[k] -= factor * prow[k];
    }
    if (basis[r] != kArtificial) is_basic[basis[r]] = 0;
    basis[r] = j;
    is_basic[j] = 1;
    ++pivots;
  }

  enum class StepResult { Moved, Unbounded };

  // One simplex iteration on column j in direction dir. Returns whether the
  // step was degenerate through `degenerate`.
  StepResult step(int j, int dir, bool phase_one, bool& degenerate) {
    std::optional<Rational> best_theta;
    int leave_row = -1;  // -1 = bound flip of the entering column
    int leave_key = std::numeric_limits<int>::max();
    if (lo[j] && hi[j]) best_theta = *hi[j] - *lo[j];

    for (int r = 0; r < rows; ++r) {
      const Rational& a = tab[r][j];
      if (sgn(a) == 0) continue;
      // d(x_B) / d(theta) = -a * dir
      const int rate = -sgn(a) * dir;
      std::optional<Rational> limit;
      if (basis[r] == kArtificial) {
        if (!phase_one) continue;  // redundant row, stays at zero
        if (rate < 0) limit = art_value[r] / abs(a);
      } else {
        const int b = basis[r];
        if (rate < 0 && lo[b]) limit = (x[b] - *lo[b]) / abs(a);
        if (rate > 0 && hi[b]) limit = (*hi[b] - x[b]) / abs(a);
      }
      if (!limit) continue;
      const int key = basis[r] == kArtificial ? -1 : basis[r];
      bool take = false;
      if (!best_theta || *limit < *best_theta) {
        take = true;
      } else if (*limit == *best_theta && leave_row >= 0 && key < leave_key) {
        take = true;
      }
      if (take) {
        best_theta = *limit;
        leave_row = r;
        leave_key = key;
      }
    }
    if (!best_theta) return StepResult::Unbounded;

    const Rational theta = *best_theta;
    degenerate = sgn(theta) == 0;
    if (!degenerate) {
      const Rational delta = dir > 0 ? theta : Rational(-theta);
      x[j] += delta;
      for (int r = 0; r < rows; ++r) {
        const Rational& a = tab[r][j];
        if (sgn(a) == 0) continue;
        if (basis[r] == kArtificial) {
          art_value[r] -= a * delta;
        } else {
          x[basis[r]] -= a * delta;
        }
      }
    }
    if (leave_row < 0) {
      // bound flip; snap exactly onto the bound
      x[j] = dir > 0 ? *hi[j] : *lo[j];
      return StepResult::Moved;
    }
    const int b = basis[leave_row];
    if (b == kArtificial) {
      art_value[leave_row] = 0;
    } else {
      const int rate = -sgn(tab[leave_row][j]) * dir;
      x[b] = rate < 0 ? *lo[b] : *hi[b];
    }
    pivot(leave_row, j);
    return StepResult::Moved;
  }

  // Runs pricing + steps to optimality of the current reduced-cost row.
  StepResult iterate(bool phase_one) {
    int degenerate_run = 0;
    for (;;) {
      const bool bland = rule == PricingRule::Bland || degenerate_run >= kDegenerateRunLimit;
      const int j = choose_entering(bland);
      if (j < 0) return StepResult::Moved;
      bool degenerate = false;
      if (step(j, improving_direction(j), phase_one, degenerate) == StepResult::Unbounded) {
        return StepResult::Unbounded;
      }
      degenerate_run = degenerate ? degenerate_run + 1 : 0;
    }
  }

  void phase_one() {
    reduced.assign(cols, 0);
    bool any_artificial = false;
    for (int r = 0; r < rows; ++r) {
      if (basis[r] != kArtificial) continue;
      any_artificial = true;
      for (int k = 0; k < cols; ++k) {
        if (sgn(tab[r][k]) != 0) reduced[k] -= tab[r][k];
      }
    }
    if (any_artificial) iterate(true);
    for (int r = 0; r < rows; ++r) {
      if (basis[r] == kArtificial && sgn(art_value[r]) != 0) {
        phase = Phase::Infeasible;
        return;
      }
    }
    // Drive zero-valued artificials out with degenerate pivots.
    for (int r = 0; r < rows; ++r) {
      if (basis[r] != kArtificial) continue;
      for (int k = 0; k < cols; ++k) {
        if (!is_basic[k] && sgn(tab[r][k]) != 0) {
          pivot(r, k);
          break;
        }
      }
    }
    phase = Phase::Feasible;
  }

  void price_objective() {
    reduced = cost;
    for (int r = 0; r < rows; ++r) {
      if (basis[r] == kArtificial) continue;
      const Rational& cb = cost[basis[r]];
      if (sgn(cb) == 0) continue;
      const auto& row = tab[r];
      for (int k = 0; k < cols; ++k) {
        if (sgn(row[k]) != 0) reduced[k] -= cb * row[k];
      }
    }
  }

  LpResult solve() {
    LpResult result;
    if (phase == Phase::Fresh) phase_one();
    if (phase == Phase::Infeasible) {
      result.status = LpStatus::Infeasible;
      result.pivots = pivots;
      return result;
    }
    price_objective();
    if (iterate(false) == StepResult::Unbounded) {
      result.status = LpStatus::Unbounded;
      result.pivots = pivots;
      return result;
    }
    result.status = LpStatus::Optimal;
    result.values.assign(num_model_vars, 0);
    for (int i = 0; i < num_model_vars; ++i) {
      result.values[i] = x[pos_col[i]];
      if (neg_col[i] >= 0) result.values[i] -= x[neg_col[i]];
    }
    Rational obj = cost_constant;
    for (int j = 0; j < cols; ++j) {
      if (sgn(cost[j]) != 0) obj += cost[j] * x[j];
    }
    // cost holds the minimization form
    result.objective = sense == ObjSense::Minimize ? obj : Rational(2 * cost_constant - obj);
    const int structural = static_cast<int>(pos_col.empty() ? 0 : col_model_var.size() - rows);
    for (int r = 0; r < rows; ++r) {
      const int b = basis[r];
      if (b == kArtificial) continue;
      result.basis.push_back(b < structural ? col_model_var[b] : num_model_vars + (b - structural));
    }
    std::sort(result.basis.begin(), result.basis.end());
    result.basis.erase(std::unique(result.basis.begin(), result.basis.end()), result.basis.end());
    result.pivots = pivots;
    return result;
  }
};

SimplexSolver::SimplexSolver(const LinearModel& model, PricingRule rule)
    : impl_(std::make_unique<Impl>(model, rule)) {}
SimplexSolver::~SimplexSolver() = default;
SimplexSolver::SimplexSolver(SimplexSolver&&) noexcept = default;
SimplexSolver& SimplexSolver::operator=(SimplexSolver&&) noexcept = default;

void SimplexSolver::set_objective(const Objective& objective) { impl_->set_objective(objective); }

LpResult SimplexSolver::solve() { return impl_->solve(); }

LpResult solve(const LinearModel& model, PricingRule rule) {
  SimplexSolver solver(model, rule);
  return solver.solve();
}

int count_fractional(const LinearModel& model, const LpResult& result,
                     const std::vector<int>& subset) {
  int count = 0;
  for (int idx : subset) {
    const auto& var = model.vars.at(static_cast<size_t>(idx));
    const Rational& value = result.values.at(static_cast<size_t>(idx));
    const bool above = !var.lower || value > *var.lower;
    const bool below = !var.upper || value < *var.upper;
    if (above && below) ++count;
  }
  return count;
}

}  // namespace covermip
