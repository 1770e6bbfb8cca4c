#include "covermip/formulation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "covermip/error.hpp"

namespace covermip {

namespace {

void add_term(Terms& terms, int var, const Rational& coef) {
  if (coef != 0) terms.emplace_back(var, coef);
}

std::string piece_tag(int g, std::int64_t b) {
  return "_g" + std::to_string(g) + "_b" + std::to_string(b);
}

}  // namespace

LinearModel hull_y(const HullYParams& p) {
  if (p.delta <= 0) throw PreconditionError("hull_y: delta must be positive");
  if (p.sigma <= 0 || p.sigma > 1) throw PreconditionError("hull_y: sigma must lie in (0, 1]");
  if (p.nu < 1) throw PreconditionError("hull_y: nu must be at least 1");
  const BigInt need = ceil_of(p.delta - p.sigma);
  if (BigInt(p.nu) < need) {
    throw PreconditionError("hull_y: nu = " + std::to_string(p.nu) + " is below ceil(delta - sigma) = " +
                            need.get_str());
  }

  LinearModel model;
  const int alpha = model.add_variable("alpha", Rational(0), p.sigma);
  std::vector<int> psi;
  for (int i = 1; i <= p.nu; ++i) {
    psi.push_back(model.add_variable("psi" + std::to_string(i), Rational(0), Rational(1)));
  }

  Terms cover{{alpha, Rational(1)}};
  Terms count;
  for (int var : psi) {
    cover.emplace_back(var, Rational(1));
    count.emplace_back(var, Rational(1));
  }
  model.add_constraint("cover", std::move(cover), Relation::GreaterEqual, p.delta);
  model.add_constraint("count", std::move(count), Relation::GreaterEqual, Rational(need));

  const Rational frac = frac_of(p.delta);
  Terms mir{{alpha, Rational(1)}};
  for (int var : psi) add_term(mir, var, frac);
  model.add_constraint("mir", std::move(mir), Relation::GreaterEqual,
                       frac * Rational(ceil_of(p.delta)));
  return model;
}

void validate(const UniformInstance& in) {
  if (in.n < 1) throw ValidationError("uniform instance needs n >= 1");
  if (static_cast<int>(in.v.size()) != in.n || static_cast<int>(in.f.size()) != in.n) {
    throw ValidationError("uniform instance: v and f must have n entries");
  }
  if (in.ell < 0 || in.cap < in.ell || in.d < in.cap) {
    throw ValidationError("uniform instance needs d >= c >= l >= 0");
  }
  if (in.cap == 0) throw ValidationError("uniform instance needs c > 0");
  for (int i = 0; i < in.n; ++i) {
    if (in.v[i] < 0 || in.f[i] < 0) throw ValidationError("uniform instance: negative cost");
    if (i > 0 && in.v[i] > in.v[i - 1]) {
      throw ValidationError("uniform instance: v must be sorted in descending order");
    }
  }
}

CoverInstance to_cover(const UniformInstance& in) {
  CoverInstance out;
  out.sense = Sense::Cover;
  out.n = in.n;
  out.m = 1;
  for (int i = 0; i < in.n; ++i) {
    out.v.push_back({in.v[i]});
    out.l.push_back({in.ell});
    out.c.push_back({in.cap});
    out.f.push_back(in.f[i]);
  }
  out.d = {in.d};
  return out;
}

UniformInstance to_uniform(const CoverInstance& in) {
  if (in.m != 1 || in.n < 1) throw ValidationError("uniform instances have exactly one constraint");
  if (in.sense != Sense::Cover) throw ValidationError("uniform instances are cover instances");
  for (int i = 1; i < in.n; ++i) {
    if (in.l[i][0] != in.l[0][0] || in.c[i][0] != in.c[0][0]) {
      throw ValidationError("bounds are not uniform across items");
    }
  }
  std::vector<int> order(static_cast<size_t>(in.n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return in.v[a][0] > in.v[b][0]; });
  UniformInstance out;
  out.n = in.n;
  out.ell = in.l[0][0];
  out.cap = in.c[0][0];
  out.d = in.d[0];
  for (int i : order) {
    out.v.push_back(in.v[i][0]);
    out.f.push_back(in.f[i]);
  }
  validate(out);
  return out;
}

std::int64_t UniformPieces::count() const {
  std::int64_t total = 0;
  for (int g = 1; g <= g_max; ++g) total += std::max<std::int64_t>(0, (g - 1) - b_lo[g - 1] + 1);
  return total;
}

UniformPieces uniform_pieces(const UniformInstance& in) {
  validate(in);
  const std::int64_t n = in.n;
  UniformPieces out;
  if (in.cap == in.ell) {
    out.g_max = in.n;
  } else {
    const BigInt top = floor_of(Rational((n + 1) * in.cap - in.d - in.ell, in.cap - in.ell));
    out.g_max = top < n ? static_cast<int>(std::max<long>(top.get_si(), 0)) : in.n;
  }
  for (int g = 1; g <= out.g_max; ++g) {
    std::int64_t lo = 0;
    if (in.ell > 0) {
      const BigInt need = ceil_of(Rational(in.d - (n + 1 - g) * in.cap, in.ell));
      lo = std::max<long>(0, need.get_si());
    }
    out.b_lo.push_back(lo);
  }
  return out;
}

std::int64_t uniform_variable_count(const UniformInstance& in) {
  return 2 * static_cast<std::int64_t>(in.n) + uniform_pieces(in).count() * (in.n + 2);
}

LinearModel build_uniform_perfect(const UniformInstance& in) {
  const UniformPieces pieces = uniform_pieces(in);
  if (pieces.count() == 0) throw InfeasibleError("uniform instance admits no pivot position");
  const int n = in.n;
  const Rational ell(in.ell);
  const Rational cap(in.cap);

  LinearModel model;
  std::vector<int> x(static_cast<size_t>(n));
  std::vector<int> y(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) x[i] = model.add_variable("x" + std::to_string(i + 1), Rational(0), std::nullopt);
  for (int i = 0; i < n; ++i) y[i] = model.add_variable("y" + std::to_string(i + 1), Rational(0), std::nullopt);

  struct Piece {
    int g;
    std::int64_t b;
    std::vector<int> y;
    int x;
    int z;
  };
  std::vector<Piece> list;
  for (int g = 1; g <= pieces.g_max; ++g) {
    for (std::int64_t b = pieces.b_lo[g - 1]; b <= g - 1; ++b) {
      Piece p{g, b, {}, 0, 0};
      const std::string tag = piece_tag(g, b);
      for (int i = 1; i <= n; ++i) {
        p.y.push_back(model.add_variable("y" + std::to_string(i) + tag, Rational(0), std::nullopt));
      }
      p.x = model.add_variable("x" + tag, Rational(0), std::nullopt);
      p.z = model.add_variable("z" + tag, Rational(0), std::nullopt);
      list.push_back(std::move(p));
    }
  }

  for (int i = 1; i <= n; ++i) {
    Terms terms{{x[i - 1], Rational(1)}};
    for (const Piece& p : list) {
      if (p.g > i) add_term(terms, p.y[i - 1], -ell);
      if (p.g == i) terms.emplace_back(p.x, Rational(-1));
      if (p.g < i) add_term(terms, p.y[i - 1], -cap);
    }
    model.add_constraint("xlink" + std::to_string(i), std::move(terms), Relation::Equal, Rational(0));
  }
  for (int i = 1; i <= n; ++i) {
    Terms terms{{y[i - 1], Rational(1)}};
    for (const Piece& p : list) terms.emplace_back(p.y[i - 1], Rational(-1));
    model.add_constraint("ylink" + std::to_string(i), std::move(terms), Relation::Equal, Rational(0));
  }

  for (const Piece& p : list) {
    const std::string tag = piece_tag(p.g, p.b);
    const Rational rest(in.d - (p.b + 1) * in.ell);
    const BigInt rounds_down = floor_of(rest / cap);
    const BigInt rounds_up = ceil_of(rest / cap);
    const Rational r = rest - Rational(rounds_down) * cap;

    Terms count;
    for (int i = p.g + 1; i <= n; ++i) count.emplace_back(p.y[i - 1], Rational(1));
    add_term(count, p.z, -Rational(ceil_of(Rational(in.d - p.b * in.ell - in.cap) / cap)));
    model.add_constraint("cnt" + tag, std::move(count), Relation::GreaterEqual, Rational(0));

    Terms mir{{p.x, Rational(1)}};
    for (int i = p.g + 1; i <= n; ++i) add_term(mir, p.y[i - 1], r);
    add_term(mir, p.z, -(ell + Rational(rounds_up) * r));
    model.add_constraint("mir" + tag, std::move(mir), Relation::GreaterEqual, Rational(0));

    Terms cover{{p.x, Rational(1)}};
    for (int i = p.g + 1; i <= n; ++i) cover.emplace_back(p.y[i - 1], cap);
    add_term(cover, p.z, -Rational(in.d - p.b * in.ell));
    model.add_constraint("cov" + tag, std::move(cover), Relation::GreaterEqual, Rational(0));

    Terms low;
    for (int i = 1; i < p.g; ++i) low.emplace_back(p.y[i - 1], Rational(1));
    add_term(low, p.z, -Rational(p.b));
    model.add_constraint("low" + tag, std::move(low), Relation::Equal, Rational(0));

    model.add_constraint("piv" + tag, {{p.y[p.g - 1], Rational(1)}, {p.z, Rational(-1)}},
                         Relation::Equal, Rational(0));
    Terms xlo{{p.x, Rational(1)}};
    add_term(xlo, p.z, -ell);
    model.add_constraint("xlo" + tag, std::move(xlo), Relation::GreaterEqual, Rational(0));
    model.add_constraint("xhi" + tag, {{p.x, Rational(1)}, {p.z, -cap}}, Relation::LessEqual,
                         Rational(0));
    for (int i = 1; i <= n; ++i) {
      model.add_constraint("ub" + std::to_string(i) + tag, {{p.y[i - 1], Rational(1)}, {p.z, Rational(-1)}},
                           Relation::LessEqual, Rational(0));
    }
  }

  Terms convex;
  for (const Piece& p : list) convex.emplace_back(p.z, Rational(1));
  model.add_constraint("convex", std::move(convex), Relation::Equal, Rational(1));

  model.objective.sense = ObjSense::Minimize;
  for (int i = 0; i < n; ++i) add_term(model.objective.terms, x[i], Rational(in.v[i]));
  for (int i = 0; i < n; ++i) add_term(model.objective.terms, y[i], Rational(in.f[i]));
  return model;
}

SignatureSpace signature_space(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) throw PreconditionError("epsilon must lie in (0, 1)");
  SignatureSpace space;
  space.epsilon = epsilon;
  Rational power = 1;
  const Rational step = 1 + epsilon;
  while (power > epsilon) {
    power /= step;
    ++space.K;
  }
  space.J = static_cast<int>(ceil_of(1 + 1 / epsilon).get_si());
  return space;
}

std::vector<std::vector<int>> cost_bands(const MkcInstance& in, const SignatureSpace& space, int h) {
  std::vector<std::vector<int>> bands(static_cast<size_t>(space.K));
  const Rational step = 1 + space.epsilon;
  Rational upper(in.fbar[h]);
  for (int k = 0; k < space.K; ++k) {
    const Rational lower = upper / step;
    for (int i = h + 1; i < in.eta; ++i) {
      const Rational f(in.fbar[i]);
      if (f <= upper && f > lower) bands[k].push_back(i);
    }
    upper = lower;
  }
  return bands;
}

namespace {

std::uint64_t saturating_pow_times(std::uint64_t base, int exponent, std::uint64_t factor,
                                   std::uint64_t limit) {
  unsigned __int128 total = factor;
  for (int e = 0; e < exponent; ++e) {
    total *= base;
    if (total > limit) return limit + 1;
  }
  return total > limit ? limit + 1 : static_cast<std::uint64_t>(total);
}

// Advances sigma through {0..J}^K in lexicographic order.
bool next_signature(std::vector<int>& sigma, int J) {
  for (int k = static_cast<int>(sigma.size()) - 1; k >= 0; --k) {
    if (sigma[k] < J) {
      ++sigma[k];
      return true;
    }
    sigma[k] = 0;
  }
  return false;
}

struct PieceRows {
  std::vector<int> zero;  // y forced to 0
  int one = -1;           // y forced to 1
  std::vector<std::pair<std::vector<int>, int>> equal;
  std::vector<std::pair<std::vector<int>, int>> at_least;
};

PieceRows piece_rows(const MkcInstance& in, const SignatureSpace& space, const SignaturePiece& p) {
  PieceRows rows;
  if (!p.h) {
    for (int i = 0; i < in.eta; ++i) rows.zero.push_back(i);
    return rows;
  }
  for (int i = 0; i < *p.h; ++i) rows.zero.push_back(i);
  rows.one = *p.h;
  const auto bands = cost_bands(in, space, *p.h);
  for (int k = 0; k < space.K; ++k) {
    if (p.sigma[k] < space.J) {
      rows.equal.emplace_back(bands[k], p.sigma[k]);
    } else {
      rows.at_least.emplace_back(bands[k], space.J);
    }
  }
  return rows;
}

bool piece_nonempty(const MkcInstance& in, const PieceRows& rows) {
  LinearModel lp;
  for (int i = 0; i < in.eta; ++i) lp.add_variable("y" + std::to_string(i + 1), Rational(0), Rational(1));
  const int alpha = lp.add_variable("alpha", Rational(0), Rational(in.cbar[0]));
  for (int i : rows.zero) lp.vars[i].upper = Rational(0);
  if (rows.one >= 0) lp.vars[rows.one].lower = Rational(1);
  Terms knap;
  for (int i = 0; i < in.eta; ++i) add_term(knap, i, Rational(in.wbar[i][0]));
  knap.emplace_back(alpha, Rational(1));
  lp.add_constraint("knap", std::move(knap), Relation::GreaterEqual, Rational(in.dbar[0]));
  for (const auto& [items, count] : rows.equal) {
    Terms t;
    for (int i : items) t.emplace_back(i, Rational(1));
    lp.add_constraint("eq", std::move(t), Relation::Equal, Rational(count));
  }
  for (const auto& [items, count] : rows.at_least) {
    Terms t;
    for (int i : items) t.emplace_back(i, Rational(1));
    lp.add_constraint("ge", std::move(t), Relation::GreaterEqual, Rational(count));
  }
  return solve(lp).status != LpStatus::Infeasible;
}

}  // namespace

EpsFormulation build_eps_1mkc(const MkcInstance& in, const Rational& epsilon, std::uint64_t cap) {
  if (in.mu != 1) throw PreconditionError("the approximate formulation needs mu = 1");
  if (in.sense != Sense::Cover) throw PreconditionError("the approximate formulation needs a cover instance");
  if (!in.fixed.empty()) throw PreconditionError("the approximate formulation does not take fixed items");
  if (auto violations = validate(in); !violations.empty()) {
    throw PreconditionError("invalid knapsack instance: " + violations.front().message);
  }
  for (int i = 1; i < in.eta; ++i) {
    if (in.fbar[i] > in.fbar[i - 1]) throw PreconditionError("fbar must be sorted in descending order");
  }

  EpsFormulation out;
  out.space = signature_space(epsilon);
  const SignatureSpace& space = out.space;
  out.candidate_count = saturating_pow_times(static_cast<std::uint64_t>(space.J) + 1, space.K,
                                             static_cast<std::uint64_t>(in.eta), cap);
  if (out.candidate_count > cap) {
    throw CapExceeded("(J+1)^K * eta exceeds the cap of " + std::to_string(cap) + " polyhedra (K = " +
                      std::to_string(space.K) + ", J = " + std::to_string(space.J) + ")");
  }

  std::vector<std::pair<SignaturePiece, PieceRows>> kept;
  for (int h = 0; h < in.eta; ++h) {
    const auto bands = cost_bands(in, space, h);
    std::vector<int> sigma(static_cast<size_t>(space.K), 0);
    do {
      bool possible = true;
      for (int k = 0; k < space.K && possible; ++k) {
        possible = static_cast<int>(bands[k].size()) >= sigma[k];
      }
      if (!possible) continue;
      SignaturePiece piece{h, sigma};
      PieceRows rows = piece_rows(in, space, piece);
      if (piece_nonempty(in, rows)) kept.emplace_back(std::move(piece), std::move(rows));
    } while (next_signature(sigma, space.J));
  }
  if (in.cbar[0] >= in.dbar[0]) {
    SignaturePiece empty{std::nullopt, {}};
    PieceRows rows = piece_rows(in, space, empty);
    kept.emplace_back(std::move(empty), std::move(rows));
  }

  LinearModel& model = out.model;
  std::vector<int> y;
  for (int i = 0; i < in.eta; ++i) y.push_back(model.add_variable("y" + std::to_string(i + 1), Rational(0), Rational(1)));
  const int alpha = model.add_variable("alpha", Rational(0), Rational(in.cbar[0]));

  std::vector<int> lambdas;
  std::vector<std::vector<std::pair<int, int>>> copies_of(static_cast<size_t>(in.eta));
  std::vector<int> alpha_copies;
  for (size_t p = 0; p < kept.size(); ++p) {
    const auto& [piece, rows] = kept[p];
    const std::string tag = "_p" + std::to_string(p + 1);
    const int lam = model.add_variable("lam" + std::to_string(p + 1), Rational(0), std::nullopt);
    lambdas.push_back(lam);
    std::vector<int> copy(static_cast<size_t>(in.eta), -1);
    std::vector<std::uint8_t> zero(static_cast<size_t>(in.eta), 0);
    for (int i : rows.zero) zero[i] = 1;
    for (int i = 0; i < in.eta; ++i) {
      if (zero[i]) continue;
      copy[i] = model.add_variable("y" + std::to_string(i + 1) + tag, Rational(0), std::nullopt);
      copies_of[i].emplace_back(static_cast<int>(p), copy[i]);
    }
    const int a = model.add_variable("alpha" + tag, Rational(0), std::nullopt);
    alpha_copies.push_back(a);

    Terms knap;
    for (int i = 0; i < in.eta; ++i) {
      if (copy[i] >= 0) add_term(knap, copy[i], Rational(in.wbar[i][0]));
    }
    knap.emplace_back(a, Rational(1));
    add_term(knap, lam, -Rational(in.dbar[0]));
    model.add_constraint("knap" + tag, std::move(knap), Relation::GreaterEqual, Rational(0));
    Terms ahi{{a, Rational(1)}};
    add_term(ahi, lam, -Rational(in.cbar[0]));
    model.add_constraint("ahi" + tag, std::move(ahi), Relation::LessEqual, Rational(0));
    for (int i = 0; i < in.eta; ++i) {
      if (copy[i] < 0) continue;
      if (i == rows.one) {
        model.add_constraint("one" + tag, {{copy[i], Rational(1)}, {lam, Rational(-1)}},
                             Relation::Equal, Rational(0));
      } else {
        model.add_constraint("ub" + std::to_string(i + 1) + tag,
                             {{copy[i], Rational(1)}, {lam, Rational(-1)}}, Relation::LessEqual,
                             Rational(0));
      }
    }
    const auto bands = piece.h ? cost_bands(in, space, *piece.h) : std::vector<std::vector<int>>{};
    for (int band = 0; piece.h && band < space.K; ++band) {
      Terms t;
      for (int i : bands[band]) t.emplace_back(copy[i], Rational(1));
      const bool capped = piece.sigma[band] >= space.J;
      add_term(t, lam, -Rational(capped ? space.J : piece.sigma[band]));
      model.add_constraint("sig" + std::to_string(band + 1) + tag, std::move(t),
                           capped ? Relation::GreaterEqual : Relation::Equal, Rational(0));
    }
  }

  Terms convex;
  for (int lam : lambdas) convex.emplace_back(lam, Rational(1));
  model.add_constraint("convex", std::move(convex), Relation::Equal, Rational(1));
  for (int i = 0; i < in.eta; ++i) {
    Terms t{{y[i], Rational(1)}};
    for (const auto& [p, var] : copies_of[i]) t.emplace_back(var, Rational(-1));
    model.add_constraint("ylink" + std::to_string(i + 1), std::move(t), Relation::Equal, Rational(0));
  }
  Terms alink{{alpha, Rational(1)}};
  for (int a : alpha_copies) alink.emplace_back(a, Rational(-1));
  model.add_constraint("alink", std::move(alink), Relation::Equal, Rational(0));

  model.objective.sense = ObjSense::Minimize;
  for (int i = 0; i < in.eta; ++i) add_term(model.objective.terms, y[i], Rational(in.fbar[i]));
  add_term(model.objective.terms, alpha, Rational(in.vbar[0]));

  for (auto& entry : kept) out.pieces.push_back(std::move(entry.first));
  return out;
}

SignaturePiece classify(const MkcInstance& in, const SignatureSpace& space,
                        const std::vector<std::uint8_t>& y) {
  const auto first = std::find(y.begin(), y.end(), std::uint8_t{1});
  if (first == y.end()) return SignaturePiece{std::nullopt, {}};
  const int h = static_cast<int>(first - y.begin());
  SignaturePiece piece{h, std::vector<int>(static_cast<size_t>(space.K), 0)};
  const auto bands = cost_bands(in, space, h);
  for (int k = 0; k < space.K; ++k) {
    int count = 0;
    for (int i : bands[k]) count += y[i];
    piece.sigma[k] = std::min(count, space.J);
  }
  return piece;
}

}  // namespace covermip
