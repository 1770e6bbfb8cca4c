#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covermip/rational.hpp"

namespace covermip {

enum class VarKind { Continuous, Binary, Integer };
enum class Relation { LessEqual, Equal, GreaterEqual };
enum class ObjSense { Minimize, Maximize };

/// Sparse linear term list: (variable index, coefficient).
using Terms = std::vector<std::pair<int, Rational>>;

struct Variable {
  std::string name;
  std::optional<Rational> lower;  // nullopt = -infinity
  std::optional<Rational> upper;  // nullopt = +infinity
  VarKind kind = VarKind::Continuous;
};

struct Constraint {
  std::string name;
  Terms terms;
  Relation relation = Relation::GreaterEqual;
  Rational rhs;
};

struct Objective {
  ObjSense sense = ObjSense::Minimize;
  Terms terms;
  Rational constant;
};

/// Symbolic LP/MIP. The solver ignores integrality (LP relaxation).
struct LinearModel {
  std::vector<Variable> vars;
  std::vector<Constraint> constraints;
  Objective objective;

  int add_variable(std::string name, std::optional<Rational> lower, std::optional<Rational> upper,
                   VarKind kind = VarKind::Continuous);
  void add_constraint(std::string name, Terms terms, Relation relation, Rational rhs);

  int num_vars() const { return static_cast<int>(vars.size()); }
  int num_constraints() const { return static_cast<int>(constraints.size()); }
};

/// Throws PreconditionError on out-of-range indices, duplicate indices in a
/// term list, crossed bounds, or binary variables outside [0, 1].
void check_model(const LinearModel& model);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> values;  // one per model variable
  Rational objective;
  /// Basic columns: i < num_vars is a model variable, num_vars + r is the
  /// slack of constraint r.
  std::vector<int> basis;
  int pivots = 0;
};

/// Entering-variable choice. Bland is the lowest-index improving column;
/// Dantzig takes the most negative reduced cost and falls back to Bland
/// after a run of degenerate pivots.
enum class PricingRule { Bland, Dantzig };

/// Exact-rational bounded-variable primal simplex (two phases). Keeps its
/// basis between solves, so changing only the objective re-optimizes from
/// the previous vertex.
class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearModel& model, PricingRule rule = PricingRule::Bland);
  ~SimplexSolver();
  SimplexSolver(SimplexSolver&&) noexcept;
  SimplexSolver& operator=(SimplexSolver&&) noexcept;

  /// Replaces the objective (same variable space).
  void set_objective(const Objective& objective);
  LpResult solve();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot solve. Optimal results are vertices: every non-basic column
/// sits exactly at a finite bound.
LpResult solve(const LinearModel& model, PricingRule rule = PricingRule::Bland);

/// Number of indices in `subset` whose value lies strictly inside the
/// variable's bounds.
int count_fractional(const LinearModel& model, const LpResult& result,
                     const std::vector<int>& subset);

std::string_view to_string(LpStatus status);

}  // namespace covermip
