#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covermip/rational.hpp"

namespace covermip {

enum class Sense { Cover, Pack };

/// Row-major by item: m[i][j].
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using IntVector = std::vector<std::int64_t>;

/// Largest coefficient accepted anywhere in instance data. Keeps every
/// derived integer (f + sum v*w, column sums) well inside int64.
inline constexpr std::int64_t kMaxCoefficient = 1'000'000'000;

/// The covering program
///   min sum v_ij x_ij + sum f_i y_i
///   s.t. sum_i x_ij >= d_j, l_ij y_i <= x_ij <= c_ij y_i, y binary,
/// or its packing twin (max, sum_i x_ij <= d_j).
struct CoverInstance {
  Sense sense = Sense::Cover;
  int n = 0;
  int m = 0;
  IntMatrix v;
  IntMatrix l;
  IntMatrix c;
  IntVector d;
  IntVector f;

  bool operator==(const CoverInstance&) const = default;
};

/// Knapsack cover (or packing) with one continuous variable alpha_j in
/// [0, cbar_j] per dimension. `fixed` lists items that every solution must
/// select; the decomposition uses it for the pivot items.
struct MkcInstance {
  Sense sense = Sense::Cover;
  int eta = 0;
  int mu = 0;
  IntVector fbar;
  IntVector vbar;
  IntVector cbar;
  IntMatrix wbar;
  IntVector dbar;
  std::vector<int> fixed;

  bool operator==(const MkcInstance&) const = default;
};

struct MixedSolution {
  std::vector<std::vector<Rational>> x;
  std::vector<std::uint8_t> y;
  Rational value;
};

struct MkcSolution {
  std::vector<std::uint8_t> y;
  std::vector<Rational> alpha;
  Rational value;
};

struct GenConfig {
  std::uint64_t seed = 0;
  int n = 1;
  int m = 1;
  std::int64_t coeff_max = 10;
  Sense sense = Sense::Cover;
};

struct Violation {
  int item = -1;  // -1 when the violation is not tied to an item
  int dim = -1;   // -1 when the violation is not tied to a constraint
  std::string message;
};

/// Empty iff every invariant of the instance holds.
std::vector<Violation> validate(const CoverInstance& instance);
std::vector<Violation> validate(const MkcInstance& instance);

/// Objective value of (x, y), exact.
Rational evaluate(const CoverInstance& instance,
                  const std::vector<std::vector<Rational>>& x,
                  const std::vector<std::uint8_t>& y);
Rational evaluate(const MkcInstance& instance, const std::vector<std::uint8_t>& y,
                  const std::vector<Rational>& alpha);

/// Constraint check of a solution. Returns human-readable failures; also
/// checks that the stored value equals the recomputed objective.
std::vector<std::string> check_solution(const CoverInstance& instance,
                                        const MixedSolution& solution);
std::vector<std::string> check_solution(const MkcInstance& instance,
                                        const MkcSolution& solution);

/// True iff the knapsack instance has any feasible solution.
bool is_feasible(const MkcInstance& instance);

/// Zero-cost solution when OPT = 0 (cover sense only), otherwise nullopt.
/// O(nm).
std::optional<MixedSolution> zero_optimum(const CoverInstance& instance);

/// Seeded random instance; satisfies every invariant. Cover instances are
/// feasible by construction.
CoverInstance generate(const GenConfig& config);

/// JSON (de)serialization. read_* throw ParseError on schema problems and
/// ValidationError when invariants fail.
CoverInstance read_json(std::string_view text);
std::string write_json(const CoverInstance& instance);

MkcInstance read_mkc_json(std::string_view text);
std::string write_mkc_json(const MkcInstance& instance);

std::string_view to_string(Sense sense);

}  // namespace covermip
