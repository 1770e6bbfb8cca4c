#include "covermip/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "covermip/decomposition.hpp"
#include "covermip/error.hpp"
#include "covermip/exact.hpp"
#include "covermip/formulation.hpp"
#include "covermip/fptas.hpp"
#include "covermip/instance.hpp"
#include "covermip/ptas.hpp"
#include "json.hpp"

namespace covermip {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

Rational positive_epsilon(const std::string& text) {
  Rational eps = parse_rational(text);
  if (eps <= 0) throw UsageError("--epsilon must be positive, got " + text);
  return eps;
}

Json rational_json(const Rational& q) {
  Json j;
  j["num"] = q.get_num().get_str();
  j["den"] = q.get_den().get_str();
  j["decimal"] = to_decimal(q, 17);
  return j;
}

Json solution_json(const MixedSolution& s) {
  Json j;
  j["y"] = Json::array();
  for (auto v : s.y) j["y"].push_back(static_cast<int>(v));
  j["x"] = Json::array();
  for (const auto& row : s.x) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    j["x"].push_back(std::move(r));
  }
  j["value"] = to_string(s.value);
  return j;
}

Json solution_json(const MkcSolution& s) {
  Json j;
  j["y"] = Json::array();
  for (auto v : s.y) j["y"].push_back(static_cast<int>(v));
  j["alpha"] = Json::array();
  for (const auto& q : s.alpha) j["alpha"].push_back(to_string(q));
  j["value"] = to_string(s.value);
  return j;
}

struct Report {
  std::string method;
  Rational value;
  std::optional<Rational> certified_ratio;
  std::int64_t wall_time_ms = 0;
  Json solution;
  std::vector<std::string> warnings;

  Json to_json() const {
    Json j;
    j["method"] = method;
    j["value"] = rational_json(value);
    j["certified_ratio"] = certified_ratio ? Json(to_string(*certified_ratio)) : Json(nullptr);
    j["wall_time_ms"] = wall_time_ms;
    j["solution"] = solution;
    j["warnings"] = warnings;
    return j;
  }
};

bool is_knapsack_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return doc.is_object() && doc.contains("eta");
}

struct SolveOptions {
  std::string method;
  std::optional<std::string> epsilon;
  std::string poly_eta = "eta";
  int threads = 1;
};

FptasConfig fptas_config(const Rational& eps, const SolveOptions& opt) {
  FptasConfig cfg;
  cfg.epsilon = eps;
  cfg.poly_eta = PolyEta::parse(opt.poly_eta);
  cfg.threads = opt.threads;
  return cfg;
}

PtasConfig ptas_config(const Rational& eps, const SolveOptions& opt) {
  PtasConfig cfg;
  cfg.epsilon = eps;
  cfg.threads = opt.threads;
  return cfg;
}

Report solve_mixed(const CoverInstance& in, const SolveOptions& opt) {
  Report r;
  r.method = opt.method;
  if (opt.method == "exact") {
    auto sol = exact_p(in);
    if (!sol) throw InfeasibleError("instance is infeasible");
    r.value = sol->value;
    r.certified_ratio = Rational(1);
    r.solution = solution_json(*sol);
    return r;
  }
  const Rational eps = positive_epsilon(*opt.epsilon);
  if (opt.method == "ptas") {
    PtasOutcome res = p_ptas(in, ptas_config(eps, opt));
    r.value = res.solution.value;
    r.certified_ratio = 1 + eps;
    r.solution = solution_json(res.solution);
    return r;
  }
  if (in.m != 1) throw UsageError("--method fptas needs an instance with m = 1 (got m = " + std::to_string(in.m) + ")");
  if (in.sense != Sense::Cover) throw UsageError("--method fptas supports cover instances only");
  FptasOutcome res = p1_fptas(in, fptas_config(eps, opt));
  r.value = res.solution.value;
  if (res.unscaled) {
    r.certified_ratio = Rational(1);
  } else if (res.hypothesis_holds) {
    r.certified_ratio = 1 + eps;
  }
  r.warnings = res.warnings;
  r.solution = solution_json(res.solution);
  return r;
}

Report solve_knapsack(const MkcInstance& in, const SolveOptions& opt) {
  Report r;
  r.method = opt.method;
  if (opt.method == "exact") {
    auto sol = exact_mkc(in);
    if (!sol) throw InfeasibleError("instance is infeasible");
    r.value = sol->value;
    r.certified_ratio = Rational(1);
    r.solution = solution_json(*sol);
    return r;
  }
  const Rational eps = positive_epsilon(*opt.epsilon);
  if (opt.method == "ptas") {
    const PtasConfig cfg = ptas_config(eps, opt);
    MkcSolution sol = in.sense == Sense::Cover ? mkc_ptas(in, cfg) : mkp_ptas(in, cfg);
    r.value = sol.value;
    r.certified_ratio = 1 + eps;
    r.solution = solution_json(sol);
    return r;
  }
  if (in.mu != 1) throw UsageError("--method fptas needs a one-dimensional instance (got mu = " + std::to_string(in.mu) + ")");
  if (in.sense != Sense::Cover) throw UsageError("--method fptas supports cover instances only");
  const FptasConfig cfg = fptas_config(eps, opt);
  FptasTrace trace;
  MkcSolution sol = one_mkc_fptas(in, cfg, &trace);
  const auto [lo, hi] = std::minmax_element(in.fbar.begin(), in.fbar.end());
  const BigInt poly = cfg.poly_eta.eval(in.eta);
  r.value = sol.value;
  if (trace.scaled.lambda == 1) {
    r.certified_ratio = Rational(1);
  } else if (*lo > 0 && BigInt(static_cast<long>(*hi)) <= poly * *lo) {
    r.certified_ratio = 1 + eps;
  }
  if (*lo == 0 || BigInt(static_cast<long>(*hi)) > poly * *lo) {
    r.warnings.push_back("fbar max/min = " + std::to_string(*hi) + "/" + std::to_string(*lo) +
                         " exceeds poly(eta) = " + poly.get_str() +
                         "; the (1+eps) guarantee is not certified");
  }
  r.solution = solution_json(sol);
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  std::int64_t ms() const {
    if (!enabled_) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

struct CheckRow {
  std::string method;
  Rational value;
  std::optional<Rational> bound;  // certified ratio, if any
  bool holds = true;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximation schemes and formulations for covering/packing programs with "
               "semi-continuous variables",
               "covermip"};
  app.require_subcommand(1);

  GenConfig gen;
  std::string gen_sense = "cover";
  std::string gen_output;
  auto* cmd_gen = app.add_subcommand("gen", "Generate a seeded random instance");
  cmd_gen->add_option("--n", gen.n, "Number of items")->required()->check(CLI::Range(1, 1000));
  cmd_gen->add_option("--m", gen.m, "Number of constraints")->required()->check(CLI::Range(1, 1000));
  cmd_gen->add_option("--seed", gen.seed, "Random seed")->required();
  cmd_gen->add_option("--coeff-max", gen.coeff_max, "Largest coefficient")->default_val(10);
  cmd_gen->add_option("--sense", gen_sense, "cover or pack")
      ->default_val("cover")
      ->check(CLI::IsMember({"cover", "pack"}));
  cmd_gen->add_option("--output", gen_output, "Write to this file instead of stdout");

  std::string input;
  SolveOptions solve_opt;
  bool no_timing = false;
  auto* cmd_solve = app.add_subcommand("solve", "Solve an instance and print a JSON report");
  cmd_solve->add_option("--input", input, "Instance JSON (full or knapsack form)")->required();
  cmd_solve->add_option("--method", solve_opt.method, "exact, ptas or fptas")
      ->required()
      ->check(CLI::IsMember({"exact", "ptas", "fptas"}));
  cmd_solve->add_option("--epsilon", solve_opt.epsilon, "Accuracy as p/q (ptas, fptas)");
  cmd_solve->add_option("--poly-eta", solve_opt.poly_eta, "eta, eta^2 or const:k (fptas)")->default_val("eta");
  cmd_solve->add_option("--threads", solve_opt.threads, "Worker threads")->default_val(1)->check(CLI::Range(1, 256));
  cmd_solve->add_flag("--no-timing", no_timing, "Report wall_time_ms as 0");

  std::string check_input;
  std::string check_eps;
  SolveOptions check_opt;
  bool check_no_timing = false;
  auto* cmd_check = app.add_subcommand("check", "Compare exact, ptas and fptas on one instance");
  cmd_check->add_option("--input", check_input, "Instance JSON")->required();
  cmd_check->add_option("--epsilon", check_eps, "Accuracy as p/q")->required();
  cmd_check->add_option("--poly-eta", check_opt.poly_eta, "eta, eta^2 or const:k")->default_val("eta");
  cmd_check->add_option("--threads", check_opt.threads, "Worker threads")->default_val(1)->check(CLI::Range(1, 256));
  cmd_check->add_flag("--no-timing", check_no_timing, "Report wall_time_ms as 0");

  std::string kind;
  std::string emit_input;
  std::string emit_eps;
  std::string delta;
  std::string sigma;
  int nu = 0;
  std::string emit_output;
  auto* cmd_emit = app.add_subcommand("emit", "Write a formulation in CPLEX LP format");
  cmd_emit->add_option("--kind", kind, "perfect, approx or hull-y")
      ->required()
      ->check(CLI::IsMember({"perfect", "approx", "hull-y"}));
  cmd_emit->add_option("--input", emit_input, "Instance JSON (perfect, approx)");
  cmd_emit->add_option("--epsilon", emit_eps, "Accuracy in (0, 1) (approx)");
  cmd_emit->add_option("--delta", delta, "delta (hull-y)");
  cmd_emit->add_option("--sigma", sigma, "sigma (hull-y)");
  cmd_emit->add_option("--nu", nu, "nu (hull-y)");
  cmd_emit->add_option("--output", emit_output, "LP file to write")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cmd_gen->parsed()) {
      gen.sense = gen_sense == "cover" ? Sense::Cover : Sense::Pack;
      const std::string text = write_json(generate(gen));
      if (gen_output.empty()) {
        out << text;
      } else {
        write_file(gen_output, text);
      }
      return kExitOk;
    }

    if (cmd_solve->parsed()) {
      if (solve_opt.method != "exact" && !solve_opt.epsilon) {
        throw UsageError("--epsilon is required for --method " + solve_opt.method);
      }
      const std::string text = read_file(input);
      const Timer timer(!no_timing);
      Report report = is_knapsack_document(text) ? solve_knapsack(read_mkc_json(text), solve_opt)
                                                 : solve_mixed(read_json(text), solve_opt);
      report.wall_time_ms = timer.ms();
      out << dump(report.to_json());
      return kExitOk;
    }

    if (cmd_check->parsed()) {
      const Rational eps = positive_epsilon(check_eps);
      const CoverInstance in = read_json(read_file(check_input));
      const Timer timer(!check_no_timing);
      auto exact = exact_p(in);
      if (!exact) throw InfeasibleError("instance is infeasible");
      const Rational& opt = exact->value;
      const bool cover = in.sense == Sense::Cover;
      std::vector<CheckRow> rows;
      std::vector<std::string> warnings;

      PtasConfig pcfg;
      pcfg.epsilon = eps;
      pcfg.threads = check_opt.threads;
      const PtasOutcome ptas = p_ptas(in, pcfg);
      rows.push_back({"ptas", ptas.solution.value, 1 + eps,
                      cover ? ptas.solution.value <= (1 + eps) * opt
                            : ptas.solution.value * (1 + eps) >= opt});
      if (in.m == 1 && cover) {
        SolveOptions o = check_opt;
        const FptasOutcome fp = p1_fptas(in, fptas_config(eps, o));
        CheckRow row{"fptas", fp.solution.value, std::nullopt, true};
        if (fp.unscaled) {
          row.bound = Rational(1);
          row.holds = fp.solution.value == opt;
        } else if (fp.hypothesis_holds) {
          row.bound = 1 + eps;
          row.holds = fp.solution.value <= (1 + eps) * opt;
        }
        warnings.insert(warnings.end(), fp.warnings.begin(), fp.warnings.end());
        rows.push_back(row);
      }

      bool pass = true;
      Json j;
      j["method"] = "check";
      j["epsilon"] = to_string(eps);
      j["exact"] = rational_json(opt);
      j["results"] = Json::array();
      for (const auto& row : rows) {
        Json r;
        r["method"] = row.method;
        r["value"] = rational_json(row.value);
        if (opt != 0 && row.value != 0) {
          r["ratio"] = to_string(cover ? Rational(row.value / opt) : Rational(opt / row.value));
        } else {
          r["ratio"] = nullptr;
        }
        r["certified_ratio"] = row.bound ? Json(to_string(*row.bound)) : Json(nullptr);
        r["holds"] = row.holds;
        pass = pass && row.holds;
        j["results"].push_back(std::move(r));
      }
      j["pass"] = pass;
      j["wall_time_ms"] = timer.ms();
      j["warnings"] = warnings;
      out << dump(j);
      return pass ? kExitOk : kExitCheckFailed;
    }

    if (cmd_emit->parsed()) {
      std::ostringstream summary;
      LinearModel model;
      if (kind == "hull-y") {
        if (delta.empty() || sigma.empty() || nu == 0) {
          throw UsageError("--kind hull-y needs --delta, --sigma and --nu");
        }
        model = hull_y({parse_rational(delta), parse_rational(sigma), nu});
      } else if (kind == "perfect") {
        if (emit_input.empty()) throw UsageError("--kind perfect needs --input");
        const UniformInstance uni = to_uniform(read_json(read_file(emit_input)));
        model = build_uniform_perfect(uni);
      } else {
        if (emit_input.empty() || emit_eps.empty()) {
          throw UsageError("--kind approx needs --input and --epsilon");
        }
        const EpsFormulation eps = build_eps_1mkc(read_mkc_json(read_file(emit_input)),
                                                  parse_rational(emit_eps));
        model = eps.model;
        summary << " polyhedra=" << eps.pieces.size() << " candidates=" << eps.candidate_count;
      }
      write_file(emit_output, emit_lp(model));
      out << "variables=" << model.num_vars() << " constraints=" << model.num_constraints()
          << summary.str() << "\n";
      return kExitOk;
    }
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace covermip
