#include <cctype>
#include <set>
#include <sstream>
#include <string>

#include "covermip/error.hpp"
#include "covermip/formulation.hpp"

namespace covermip {

namespace {

constexpr size_t kLineWidth = 80;

bool legal_name(const std::string& name) {
  static const std::string kSymbols = "!\"#$%&()/,.;?@_`'{}|~";
  if (name.empty() || name.size() > 255) return false;
  const auto ok = [&](char ch, bool first) {
    if (std::isalpha(static_cast<unsigned char>(ch))) return true;
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return !first;
    return kSymbols.find(ch) != std::string::npos;
  };
  if (!ok(name[0], true)) return false;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!ok(name[i], false)) return false;
  }
  // "e12" style names read back as exponents in some parsers
  return !(name[0] == 'e' || name[0] == 'E') || name.size() == 1 ||
         !std::isdigit(static_cast<unsigned char>(name[1]));
}

class Writer {
 public:
  std::string str() const { return out_.str(); }

  void line(const std::string& text) { out_ << text << '\n'; }

  // Number token; inexact values get a preceding exact comment.
  std::string number(const Rational& q, const std::string& where) {
    if (!is_terminating(q)) pending_.push_back("\\ exact: " + where + " = " + to_string(q));
    return to_decimal(q, 17);
  }

  void flush_comments() {
    for (const auto& c : pending_) line(c);
    pending_.clear();
  }

  // Writes tokens with wrapping; comments collected while building go first.
  void wrapped(const std::string& head, const std::vector<std::string>& tokens) {
    flush_comments();
    std::string current = head;
    for (const auto& tok : tokens) {
      if (current.size() + 1 + tok.size() > kLineWidth && current.size() > 1) {
        line(current);
        current = "  " + tok;
      } else {
        current += " " + tok;
      }
    }
    line(current);
  }

 private:
  std::ostringstream out_;
  std::vector<std::string> pending_;
};

std::vector<std::string> term_tokens(Writer& w, const LinearModel& model, const Terms& terms,
                                     const std::string& where) {
  std::vector<std::string> tokens;
  bool first = true;
  const auto emit = [&](const Rational& coef, const std::string& var) {
    const bool negative = coef < 0;
    const Rational mag = negative ? Rational(-coef) : coef;
    std::string tok;
    if (!first) tok = negative ? "- " : "+ ";
    else if (negative) tok = "-";
    if (mag != 1) tok += w.number(mag, where + " " + var) + " ";
    tok += var;
    tokens.push_back(tok);
    first = false;
  };
  for (const auto& [var, coef] : terms) emit(coef, model.vars[var].name);
  if (tokens.empty() && model.num_vars() > 0) tokens.push_back("0 " + model.vars[0].name);
  return tokens;
}

}  // namespace

std::string emit_lp(const LinearModel& model) {
  check_model(model);
  std::set<std::string> seen;
  for (const auto& v : model.vars) {
    if (!legal_name(v.name)) throw ValidationError("illegal LP name '" + v.name + "'");
    if (!seen.insert(v.name).second) throw ValidationError("name collision: '" + v.name + "'");
  }
  std::set<std::string> rows{"obj"};
  for (const auto& c : model.constraints) {
    if (!legal_name(c.name)) throw ValidationError("illegal LP name '" + c.name + "'");
    if (!rows.insert(c.name).second) throw ValidationError("name collision: '" + c.name + "'");
  }

  Writer w;
  w.line(model.objective.sense == ObjSense::Minimize ? "Minimize" : "Maximize");
  {
    auto tokens = term_tokens(w, model, model.objective.terms, "obj");
    const Rational& k = model.objective.constant;
    if (k != 0 || tokens.empty()) {
      const std::string num = w.number(k < 0 ? Rational(-k) : k, "obj constant");
      tokens.push_back(tokens.empty() ? (k < 0 ? "-" : "") + num : (k < 0 ? "- " : "+ ") + num);
    }
    w.wrapped(" obj:", tokens);
  }

  w.line("Subject To");
  for (const auto& c : model.constraints) {
    auto tokens = term_tokens(w, model, c.terms, c.name);
    const char* rel = c.relation == Relation::LessEqual ? "<=" : c.relation == Relation::Equal ? "=" : ">=";
    tokens.push_back(std::string(rel) + " " + w.number(c.rhs, c.name + " rhs"));
    w.wrapped(" " + c.name + ":", tokens);
  }

  w.line("Bounds");
  for (const auto& v : model.vars) {
    const bool binary = v.kind == VarKind::Binary;
    const bool lo_zero = v.lower && *v.lower == 0;
    if (binary && lo_zero && v.upper && *v.upper == 1) continue;
    if (!binary && lo_zero && !v.upper) continue;
    std::string text;
    if (!v.lower && !v.upper) {
      text = v.name + " free";
    } else if (v.lower && v.upper && *v.lower == *v.upper) {
      text = v.name + " = " + w.number(*v.lower, v.name + " fixed");
    } else if (!v.upper) {
      text = v.name + " >= " + w.number(*v.lower, v.name + " lower");
    } else {
      const std::string lo = v.lower ? w.number(*v.lower, v.name + " lower") : "-inf";
      text = lo + " <= " + v.name + " <= " + w.number(*v.upper, v.name + " upper");
    }
    w.wrapped(" " + text, {});
  }

  std::vector<std::string> binaries;
  std::vector<std::string> generals;
  for (const auto& v : model.vars) {
    if (v.kind == VarKind::Binary) binaries.push_back(v.name);
    if (v.kind == VarKind::Integer) generals.push_back(v.name);
  }
  if (!binaries.empty()) {
    w.line("Binary");
    w.wrapped(" " + binaries.front(), {binaries.begin() + 1, binaries.end()});
  }
  if (!generals.empty()) {
    w.line("General");
    w.wrapped(" " + generals.front(), {generals.begin() + 1, generals.end()});
  }
  w.line("End");
  return w.str();
}

}  // namespace covermip
