#include "covermip/instance.hpp"

#include <algorithm>
#include <string>

#include "covermip/error.hpp"

namespace covermip {
namespace {

std::string cell(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

bool shape_ok(const IntMatrix& mat, int rows, int cols) {
  if (static_cast<int>(mat.size()) != rows) return false;
  return std::all_of(mat.begin(), mat.end(),
                     [cols](const IntVector& r) { return static_cast<int>(r.size()) == cols; });
}

void check_range(std::vector<Violation>& out, std::int64_t value, int i, int j,
                 const std::string& what) {
  if (value < 0) {
    out.push_back({i, j, what + " >= 0 fails"});
  } else if (value > kMaxCoefficient) {
    out.push_back({i, j, what + " exceeds " + std::to_string(kMaxCoefficient)});
  }
}

}  // namespace

std::string_view to_string(Sense sense) { return sense == Sense::Cover ? "cover" : "pack"; }

std::vector<Violation> validate(const CoverInstance& in) {
  std::vector<Violation> out;
  if (in.n < 1) out.push_back({-1, -1, "n >= 1 fails"});
  if (in.m < 1) out.push_back({-1, -1, "m >= 1 fails"});
  if (!out.empty()) return out;
  const bool shapes = shape_ok(in.v, in.n, in.m) && shape_ok(in.l, in.n, in.m) &&
                      shape_ok(in.c, in.n, in.m) && static_cast<int>(in.d.size()) == in.m &&
                      static_cast<int>(in.f.size()) == in.n;
  if (!shapes) {
    out.push_back({-1, -1, "matrix/vector shapes do not match n and m"});
    return out;
  }
  for (int j = 0; j < in.m; ++j) check_range(out, in.d[j], -1, j, "d_" + std::to_string(j + 1));
  for (int i = 0; i < in.n; ++i) {
    check_range(out, in.f[i], i, -1, "f_" + std::to_string(i + 1));
    for (int j = 0; j < in.m; ++j) {
      check_range(out, in.v[i][j], i, j, "v_" + cell(i, j));
      check_range(out, in.l[i][j], i, j, "l_" + cell(i, j));
      check_range(out, in.c[i][j], i, j, "c_" + cell(i, j));
      if (in.d[j] < in.c[i][j]) {
        out.push_back({i, j,
                       "d_" + std::to_string(j + 1) + " >= c_" + cell(i, j) + " fails (" +
                           std::to_string(in.d[j]) + " < " + std::to_string(in.c[i][j]) + ")"});
      }
      if (in.c[i][j] < in.l[i][j]) {
        out.push_back({i, j,
                       "c_" + cell(i, j) + " >= l_" + cell(i, j) + " fails (" +
                           std::to_string(in.c[i][j]) + " < " + std::to_string(in.l[i][j]) + ")"});
      }
    }
  }
  return out;
}

std::vector<Violation> validate(const MkcInstance& in) {
  std::vector<Violation> out;
  if (in.eta < 0) out.push_back({-1, -1, "eta >= 0 fails"});
  if (in.mu < 1) out.push_back({-1, -1, "mu >= 1 fails"});
  if (!out.empty()) return out;
  const bool shapes = static_cast<int>(in.fbar.size()) == in.eta &&
                      static_cast<int>(in.vbar.size()) == in.mu &&
                      static_cast<int>(in.cbar.size()) == in.mu &&
                      static_cast<int>(in.dbar.size()) == in.mu && shape_ok(in.wbar, in.eta, in.mu);
  if (!shapes) {
    out.push_back({-1, -1, "vector shapes do not match eta and mu"});
    return out;
  }
  for (int i = 0; i < in.eta; ++i) {
    check_range(out, in.fbar[i], i, -1, "fbar_" + std::to_string(i + 1));
    for (int j = 0; j < in.mu; ++j) check_range(out, in.wbar[i][j], i, j, "wbar_" + cell(i, j));
  }
  for (int j = 0; j < in.mu; ++j) {
    check_range(out, in.vbar[j], -1, j, "vbar_" + std::to_string(j + 1));
    check_range(out, in.cbar[j], -1, j, "cbar_" + std::to_string(j + 1));
    check_range(out, in.dbar[j], -1, j, "dbar_" + std::to_string(j + 1));
  }
  for (int item : in.fixed) {
    if (item < 0 || item >= in.eta) out.push_back({item, -1, "fixed item out of range"});
  }
  return out;
}

Rational evaluate(const CoverInstance& in, const std::vector<std::vector<Rational>>& x,
                  const std::vector<std::uint8_t>& y) {
  Rational total = 0;
  for (int i = 0; i < in.n; ++i) {
    if (y[i]) total += in.f[i];
    for (int j = 0; j < in.m; ++j) total += Rational(in.v[i][j]) * x[i][j];
  }
  return total;
}

Rational evaluate(const MkcInstance& in, const std::vector<std::uint8_t>& y,
                  const std::vector<Rational>& alpha) {
  Rational total = 0;
  for (int i = 0; i < in.eta; ++i) {
    if (y[i]) total += in.fbar[i];
  }
  for (int j = 0; j < in.mu; ++j) total += Rational(in.vbar[j]) * alpha[j];
  return total;
}

std::vector<std::string> check_solution(const CoverInstance& in, const MixedSolution& s) {
  std::vector<std::string> out;
  if (static_cast<int>(s.y.size()) != in.n || static_cast<int>(s.x.size()) != in.n) {
    out.push_back("solution shape does not match instance");
    return out;
  }
  for (int i = 0; i < in.n; ++i) {
    if (static_cast<int>(s.x[i].size()) != in.m) {
      out.push_back("solution shape does not match instance");
      return out;
    }
    if (s.y[i] > 1) out.push_back("y_" + std::to_string(i + 1) + " not binary");
  }
  for (int j = 0; j < in.m; ++j) {
    Rational sum = 0;
    for (int i = 0; i < in.n; ++i) {
      const Rational& x = s.x[i][j];
      const std::int64_t y = s.y[i];
      if (x < in.l[i][j] * y || x > in.c[i][j] * y) {
        out.push_back("bound on x_" + cell(i, j) + " violated");
      }
      sum += x;
    }
    if (in.sense == Sense::Cover && sum < in.d[j]) {
      out.push_back("demand " + std::to_string(j + 1) + " not covered");
    }
    if (in.sense == Sense::Pack && sum > in.d[j]) {
      out.push_back("capacity " + std::to_string(j + 1) + " exceeded");
    }
  }
  if (out.empty() && evaluate(in, s.x, s.y) != s.value) {
    out.push_back("stored value differs from objective");
  }
  return out;
}

std::vector<std::string> check_solution(const MkcInstance& in, const MkcSolution& s) {
  std::vector<std::string> out;
  if (static_cast<int>(s.y.size()) != in.eta || static_cast<int>(s.alpha.size()) != in.mu) {
    out.push_back("solution shape does not match instance");
    return out;
  }
  for (int item : in.fixed) {
    if (!s.y[item]) out.push_back("fixed item " + std::to_string(item + 1) + " not selected");
  }
  for (int j = 0; j < in.mu; ++j) {
    const Rational& a = s.alpha[j];
    if (a < 0 || a > in.cbar[j]) out.push_back("alpha_" + std::to_string(j + 1) + " out of bounds");
    Rational load = a;
    for (int i = 0; i < in.eta; ++i) {
      if (s.y[i]) load += in.wbar[i][j];
    }
    if (in.sense == Sense::Cover && load < in.dbar[j]) {
      out.push_back("dimension " + std::to_string(j + 1) + " not covered");
    }
    if (in.sense == Sense::Pack && load > in.dbar[j]) {
      out.push_back("dimension " + std::to_string(j + 1) + " over capacity");
    }
  }
  if (out.empty() && evaluate(in, s.y, s.alpha) != s.value) {
    out.push_back("stored value differs from objective");
  }
  return out;
}

bool is_feasible(const MkcInstance& in) {
  for (int j = 0; j < in.mu; ++j) {
    if (in.sense == Sense::Cover) {
      std::int64_t total = 0;
      for (int i = 0; i < in.eta; ++i) total += in.wbar[i][j];
      if (total < in.dbar[j] - in.cbar[j]) return false;
    } else {
      std::vector<bool> seen(static_cast<size_t>(in.eta), false);
      std::int64_t load = 0;
      for (int item : in.fixed) {
        if (!seen[item]) load += in.wbar[item][j];
        seen[item] = true;
      }
      if (load > in.dbar[j]) return false;
    }
  }
  return true;
}

std::optional<MixedSolution> zero_optimum(const CoverInstance& in) {
  if (in.sense != Sense::Cover) throw PreconditionError("zero_optimum requires a cover instance");
  // Items that can be switched on at zero cost: f_i = 0 and no forced
  // positive-cost flow (v_ij > 0 together with l_ij > 0).
  std::vector<std::uint8_t> admissible(static_cast<size_t>(in.n), 0);
  for (int i = 0; i < in.n; ++i) {
    bool ok = in.f[i] == 0;
    for (int j = 0; ok && j < in.m; ++j) ok = in.v[i][j] == 0 || in.l[i][j] == 0;
    admissible[i] = ok ? 1 : 0;
  }
  for (int j = 0; j < in.m; ++j) {
    std::int64_t reach = 0;
    for (int i = 0; i < in.n; ++i) {
      if (admissible[i] && in.v[i][j] == 0) reach += in.c[i][j];
    }
    if (reach < in.d[j]) return std::nullopt;
  }
  MixedSolution s;
  s.y = admissible;
  s.x.assign(static_cast<size_t>(in.n), std::vector<Rational>(static_cast<size_t>(in.m), 0));
  for (int i = 0; i < in.n; ++i) {
    for (int j = 0; j < in.m; ++j) {
      if (admissible[i] && in.v[i][j] == 0) s.x[i][j] = in.c[i][j];
    }
  }
  s.value = 0;
  return s;
}

}  // namespace covermip
