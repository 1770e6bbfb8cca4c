#include <set>
#include <sstream>
#include <string>

#include "covermip/error.hpp"
#include "covermip/instance.hpp"
#include "json.hpp"

namespace covermip {
namespace {

using nlohmann::json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void require_keys(const json& doc, const std::set<std::string>& keys) {
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  for (const auto& key : keys) {
    if (!doc.contains(key)) throw ParseError("missing field '" + key + "'");
  }
  for (const auto& [key, _] : doc.items()) {
    if (!keys.count(key)) throw ParseError("unexpected field '" + key + "'");
  }
}

std::int64_t as_int(const json& value, const std::string& field) {
  if (!value.is_number_integer()) {
    throw ParseError("field '" + field + "' must hold integers");
  }
  if (value.is_number_unsigned()) {
    auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(kMaxCoefficient)) {
      throw ParseError("field '" + field + "' holds a value above " +
                       std::to_string(kMaxCoefficient));
    }
    return static_cast<std::int64_t>(u);
  }
  auto s = value.get<std::int64_t>();
  if (s > kMaxCoefficient) {
    throw ParseError("field '" + field + "' holds a value above " + std::to_string(kMaxCoefficient));
  }
  return s;
}

IntVector as_vector(const json& value, const std::string& field, int length) {
  if (!value.is_array() || static_cast<int>(value.size()) != length) {
    throw ParseError("field '" + field + "' must be an array of " + std::to_string(length) +
                     " integers");
  }
  IntVector out;
  out.reserve(value.size());
  for (const auto& e : value) out.push_back(as_int(e, field));
  return out;
}

IntMatrix as_matrix(const json& value, const std::string& field, int rows, int cols) {
  if (!value.is_array() || static_cast<int>(value.size()) != rows) {
    throw ParseError("field '" + field + "' must have " + std::to_string(rows) + " rows");
  }
  IntMatrix out;
  out.reserve(value.size());
  for (const auto& row : value) out.push_back(as_vector(row, field, cols));
  return out;
}

int as_count(const json& value, const std::string& field, int minimum) {
  auto v = as_int(value, field);
  if (v < minimum || v > 1'000'000) {
    throw ParseError("field '" + field + "' must be an integer >= " + std::to_string(minimum));
  }
  return static_cast<int>(v);
}

Sense as_sense(const json& value) {
  if (value == "cover") return Sense::Cover;
  if (value == "pack") return Sense::Pack;
  throw ParseError("field 'sense' must be \"cover\" or \"pack\"");
}

void throw_if_invalid(const std::vector<Violation>& violations) {
  if (violations.empty()) return;
  std::string msg = "instance violates invariants:";
  for (const auto& v : violations) msg += "\n  " + v.message;
  throw ValidationError(msg);
}

void write_vector(std::ostream& os, const IntVector& v) {
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
}

void write_matrix(std::ostream& os, const IntMatrix& mat) {
  os << '[';
  for (size_t i = 0; i < mat.size(); ++i) {
    os << (i ? ", " : "");
    write_vector(os, mat[i]);
  }
  os << ']';
}

}  // namespace

CoverInstance read_json(std::string_view text) {
  const json doc = parse_document(text);
  require_keys(doc, {"sense", "n", "m", "v", "l", "c", "d", "f"});
  CoverInstance in;
  in.sense = as_sense(doc["sense"]);
  in.n = as_count(doc["n"], "n", 1);
  in.m = as_count(doc["m"], "m", 1);
  in.v = as_matrix(doc["v"], "v", in.n, in.m);
  in.l = as_matrix(doc["l"], "l", in.n, in.m);
  in.c = as_matrix(doc["c"], "c", in.n, in.m);
  in.d = as_vector(doc["d"], "d", in.m);
  in.f = as_vector(doc["f"], "f", in.n);
  throw_if_invalid(validate(in));
  return in;
}

std::string write_json(const CoverInstance& in) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"sense\": \"" << to_string(in.sense) << "\",\n";
  os << "  \"n\": " << in.n << ",\n";
  os << "  \"m\": " << in.m << ",\n";
  os << "  \"v\": ";
  write_matrix(os, in.v);
  os << ",\n  \"l\": ";
  write_matrix(os, in.l);
  os << ",\n  \"c\": ";
  write_matrix(os, in.c);
  os << ",\n  \"d\": ";
  write_vector(os, in.d);
  os << ",\n  \"f\": ";
  write_vector(os, in.f);
  os << "\n}\n";
  return os.str();
}

MkcInstance read_mkc_json(std::string_view text) {
  json doc = parse_document(text);
  if (doc.is_object() && !doc.contains("fixed")) doc["fixed"] = json::array();
  require_keys(doc, {"sense", "eta", "mu", "fbar", "vbar", "cbar", "wbar", "dbar", "fixed"});
  MkcInstance in;
  in.sense = as_sense(doc["sense"]);
  in.eta = as_count(doc["eta"], "eta", 1);
  in.mu = as_count(doc["mu"], "mu", 1);
  in.fbar = as_vector(doc["fbar"], "fbar", in.eta);
  in.vbar = as_vector(doc["vbar"], "vbar", in.mu);
  in.cbar = as_vector(doc["cbar"], "cbar", in.mu);
  in.wbar = as_matrix(doc["wbar"], "wbar", in.eta, in.mu);
  in.dbar = as_vector(doc["dbar"], "dbar", in.mu);
  const json& fixed = doc["fixed"];
  if (!fixed.is_array()) throw ParseError("field 'fixed' must be an array of item indices");
  for (const auto& e : fixed) {
    // 1-based on disk
    in.fixed.push_back(static_cast<int>(as_int(e, "fixed")) - 1);
  }
  auto violations = validate(in);
  for (int j = 0; j < in.mu; ++j) {
    if (in.cbar[j] == 0) violations.push_back({-1, j, "cbar_" + std::to_string(j + 1) + " > 0 fails"});
  }
  throw_if_invalid(violations);
  return in;
}

std::string write_mkc_json(const MkcInstance& in) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"sense\": \"" << to_string(in.sense) << "\",\n";
  os << "  \"eta\": " << in.eta << ",\n";
  os << "  \"mu\": " << in.mu << ",\n";
  os << "  \"fbar\": ";
  write_vector(os, in.fbar);
  os << ",\n  \"vbar\": ";
  write_vector(os, in.vbar);
  os << ",\n  \"cbar\": ";
  write_vector(os, in.cbar);
  os << ",\n  \"wbar\": ";
  write_matrix(os, in.wbar);
  os << ",\n  \"dbar\": ";
  write_vector(os, in.dbar);
  IntVector fixed;
  for (int item : in.fixed) fixed.push_back(item + 1);
  os << ",\n  \"fixed\": ";
  write_vector(os, fixed);
  os << "\n}\n";
  return os.str();
}

}  // namespace covermip
