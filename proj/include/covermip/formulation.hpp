#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covermip/instance.hpp"
#include "covermip/lp.hpp"

namespace covermip {

/// Y = {(alpha, psi) in R+ x {0,1}^nu : alpha + sum psi >= delta, alpha <= sigma}.
struct HullYParams {
  Rational delta;
  Rational sigma;
  int nu = 1;
};

/// Convex hull of Y: bounds, the covering row, sum psi >= ceil(delta - sigma)
/// and the mixed-integer rounding row. Variables: alpha, psi1..psiN. The
/// objective is left empty. Throws PreconditionError unless delta > 0,
/// 0 < sigma <= 1, nu >= 1 and nu >= ceil(delta - sigma).
LinearModel hull_y(const HullYParams& params);

/// Single-constraint covering instance with uniform bounds, items sorted by
/// v descending.
struct UniformInstance {
  int n = 0;
  IntVector v;
  IntVector f;
  std::int64_t ell = 0;
  std::int64_t cap = 0;
  std::int64_t d = 0;
};

/// Throws ValidationError unless d >= cap >= ell >= 0, cap > 0 and v is
/// sorted descending.
void validate(const UniformInstance& instance);

/// Equivalent CoverInstance (m = 1).
CoverInstance to_cover(const UniformInstance& instance);

/// Stable-sorts the items of a one-constraint uniform cover instance by v
/// descending. Throws ValidationError if bounds are not uniform.
UniformInstance to_uniform(const CoverInstance& instance);

/// Pivot positions and admissible counts of lower-bound items.
struct UniformPieces {
  /// 1-based pivot g in [1, g_max]; b in [b_lo[g-1], g - 1].
  int g_max = 0;
  std::vector<std::int64_t> b_lo;

  std::int64_t count() const;
};

UniformPieces uniform_pieces(const UniformInstance& instance);

/// 2n + (number of (g, b) pieces) * (n + 2).
std::int64_t uniform_variable_count(const UniformInstance& instance);

/// Extended formulation whose LP optimum equals the integer optimum for
/// objectives with x-costs ordered like v. Variables: x1..xn, y1..yn, then
/// per piece (g, b) in lexicographic order: y<i>_g<g>_b<b> for every i,
/// x_g<g>_b<b>, z_g<g>_b<b>. Throws InfeasibleError when no piece exists.
LinearModel build_uniform_perfect(const UniformInstance& instance);

/// K = smallest integer with (1+eps)^-K <= eps; J = ceil(1 + 1/eps).
struct SignatureSpace {
  Rational epsilon;
  int K = 0;
  int J = 0;
};

/// Requires 0 < eps < 1.
SignatureSpace signature_space(const Rational& epsilon);

/// S^{h,k} for k = 1..K: items i > h with
/// fbar_h (1+eps)^-(k-1) >= fbar_i > fbar_h (1+eps)^-k. h is 0-based and
/// the result holds 0-based item indices.
std::vector<std::vector<int>> cost_bands(const MkcInstance& instance, const SignatureSpace& space,
                                         int h);

/// One polyhedron of the union: first selected item h (0-based) and
/// signature sigma, or the empty selection when h is unset.
struct SignaturePiece {
  std::optional<int> h;
  std::vector<int> sigma;

  bool operator==(const SignaturePiece&) const = default;
};

inline constexpr std::uint64_t kDefaultPolyhedraCap = 100'000;

struct EpsFormulation {
  LinearModel model;
  SignatureSpace space;
  /// (J+1)^K * eta.
  std::uint64_t candidate_count = 0;
  /// Nonempty pieces kept in the union, in model order.
  std::vector<SignaturePiece> pieces;
};

/// Union-of-polyhedra relaxation of the one-dimensional knapsack cover.
/// Original variables y1..yEta and alpha come first; each kept piece adds
/// lam<p>, y<i>_p<p> and alpha_p<p>. The empty-selection piece is included
/// when cbar >= dbar. Requires mu = 1, no fixed items, fbar sorted
/// descending. Throws CapExceeded when (J+1)^K * eta > cap.
EpsFormulation build_eps_1mkc(const MkcInstance& instance, const Rational& epsilon,
                              std::uint64_t cap = kDefaultPolyhedraCap);

/// The piece a 0/1 selection belongs to (h = first selected item,
/// sigma_k = min(|selected in S^{h,k}|, J)).
SignaturePiece classify(const MkcInstance& instance, const SignatureSpace& space,
                        const std::vector<std::uint8_t>& y);

/// CPLEX LP text. Terminating rationals are written exactly; others as a
/// 17-digit decimal preceded by a "\ exact" comment carrying the fraction.
/// Throws ValidationError on duplicate or malformed names.
std::string emit_lp(const LinearModel& model);

}  // namespace covermip
