#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gamma0/gamma0.hpp"

namespace {

using nlohmann::json;
using namespace gamma0;

// Exit codes: 0 success, 1 parse error, 2 domain/usage error, 3 law failures.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;
constexpr int kExitLaws = 3;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  int max_depth = 4;

  bool structured() const { return format != "text"; }
};

json ordinal_tree(const Ordinal& a) {
  json arr = json::array();
  for (const VebTerm& t : a.terms())
    arr.push_back(json{{"phi", json::array({ordinal_tree(t.level), ordinal_tree(t.arg)})}});
  arr.push_back(json{{"nat", a.trailing_nat()}});
  return arr;
}

/// Every ordinal in structured output carries its VNF string and a term tree.
json ordinal_value(const Ordinal& a) {
  return json{{"vnf", print_nf(a, NfStyle::Vnf)}, {"tree", ordinal_tree(a)}};
}

void emit_structured(const std::string& command, const json& inputs, const json& result,
                     const json& diagnostics) {
  const json doc{{"command", command},
                 {"inputs", inputs},
                 {"result", result},
                 {"diagnostics", diagnostics}};
  std::cout << doc.dump(2) << "\n";
}

int emit_error(const Options& opt, const std::string& command, const json& inputs,
               const std::exception& err) {
  std::string kind = "internal";
  int code = kExitDomain;
  json diag{{"severity", "error"}, {"message", err.what()}};
  if (const auto* pe = dynamic_cast<const parse_error*>(&err)) {
    kind = "parse";
    code = kExitParse;
    diag["offset"] = pe->offset;
    diag["expected"] = pe->expected;
  } else if (dynamic_cast<const domain_error*>(&err) ||
             dynamic_cast<const unsupported_error*>(&err)) {
    kind = "domain";
    code = kExitDomain;
  }
  diag["kind"] = kind;
  if (opt.structured()) {
    emit_structured(command, inputs, nullptr, json::array({diag}));
  } else {
    std::cerr << kind << " error: " << err.what() << "\n";
    if (diag.contains("expected")) {
      std::cerr << "expected:";
      for (const auto& e : diag["expected"]) std::cerr << " " << e.get<std::string>();
      std::cerr << "\n";
    }
  }
  return code;
}

int cmd_eval(const Options& opt, const std::string& expr, bool show_vnf, bool show_cnf,
             bool show_whnf, bool show_pretty) {
  const json inputs{{"expr", expr}};
  try {
    const Ordinal value = eval(expr);
    if (opt.structured()) {
      json result{{"value", ordinal_value(value)},
                  {"sugar", print_sugar(value)},
                  {"cnf", print_nf(value, NfStyle::Cnf)},
                  {"whnf", print_nf(value, NfStyle::Whnf)},
                  {"pretty", print_pretty(value)}};
      emit_structured("eval", inputs, result, json::array());
    } else {
      std::cout << print_sugar(value) << "\n";
      if (show_vnf) std::cout << "vnf: " << print_nf(value, NfStyle::Vnf) << "\n";
      if (show_cnf) std::cout << "cnf: " << print_nf(value, NfStyle::Cnf) << "\n";
      if (show_whnf) std::cout << "whnf: " << print_nf(value, NfStyle::Whnf) << "\n";
      if (show_pretty) std::cout << "pretty: " << print_pretty(value) << "\n";
    }
    return kExitOk;
  } catch (const std::exception& err) {
    return emit_error(opt, "eval", inputs, err);
  }
}

int cmd_cmp(const Options& opt, const std::string& lhs, const std::string& rhs) {
  const json inputs{{"lhs", lhs}, {"rhs", rhs}};
  try {
    const auto c = compare(eval(lhs), eval(rhs));
    const char* rel = c == std::strong_ordering::less ? "<"
                      : c == std::strong_ordering::greater ? ">"
                                                           : "=";
    if (opt.structured())
      emit_structured("cmp", inputs, json{{"relation", rel}}, json::array());
    else
      std::cout << rel << "\n";
    return kExitOk;
  } catch (const std::exception& err) {
    return emit_error(opt, "cmp", inputs, err);
  }
}

int cmd_nf(const Options& opt, const std::string& style, const std::string& expr) {
  const json inputs{{"style", style}, {"expr", expr}};
  try {
    const NfStyle nf_style = style == "cnf"   ? NfStyle::Cnf
                             : style == "vnf" ? NfStyle::Vnf
                                              : NfStyle::Whnf;
    const Ordinal value = eval(expr);
    const std::string rendered = print_nf(value, nf_style);
    if (opt.structured())
      emit_structured("nf", inputs,
                      json{{"rendered", rendered}, {"value", ordinal_value(value)}},
                      json::array());
    else
      std::cout << rendered << "\n";
    return kExitOk;
  } catch (const std::exception& err) {
    return emit_error(opt, "nf", inputs, err);
  }
}

int cmd_exact(const Options& opt, const std::string& fn, const std::string& v0_expr,
              const std::vector<std::string>& point_exprs, const std::string& bound_expr) {
  json inputs{{"fn", fn}, {"v0", v0_expr}, {"points", point_exprs}};
  if (!bound_expr.empty()) inputs["bound"] = bound_expr;
  try {
    const InitialFnId g = fn == "l" ? InitialFnId::EndLog : InitialFnId::LeftLog;
    const Ordinal v0 = eval(v0_expr);
    std::vector<Ordinal> points;
    points.reserve(point_exprs.size());
    for (const std::string& p : point_exprs) points.push_back(eval(p));
    Ordinal bound;
    if (bound_expr.empty()) {
      // Default domain: just beyond the largest requested index.
      for (const Ordinal& p : points)
        if (compare(bound, p) == std::strong_ordering::less) bound = p;
      bound = add(bound, Ordinal::nat(1));
    } else {
      bound = eval(bound_expr);
    }
    const ExactSeqSpec spec{g, v0, bound};
    json rows = json::array();
    for (const Ordinal& p : points) {
      const Ordinal value = exact_value(spec, p);
      if (opt.structured())
        rows.push_back(json{{"index", ordinal_value(p)},
                            {"index_sugar", print_sugar(p)},
                            {"value", ordinal_value(value)},
                            {"value_sugar", print_sugar(value)}});
      else
        std::cout << print_sugar(p) << "\t" << print_sugar(value) << "\n";
    }
    if (opt.structured()) emit_structured("exact", inputs, json{{"rows", rows}}, json::array());
    return kExitOk;
  } catch (const std::exception& err) {
    return emit_error(opt, "exact", inputs, err);
  }
}

int cmd_laws(const Options& opt, std::uint64_t samples, const std::vector<std::string>& suites) {
  const json inputs{{"samples", samples},
                    {"max_depth", opt.max_depth},
                    {"seed", opt.seed},
                    {"suites", suites.empty() ? json(law_suite_names()) : json(suites)}};
  try {
    LawSuiteConfig cfg;
    cfg.samples = samples;
    cfg.max_depth = opt.max_depth;
    cfg.seed = opt.seed;
    cfg.suites = suites;
    const LawReport report = run_laws(cfg);

    if (opt.structured()) {
      json laws = json::array();
      for (const LawResult& r : report.laws) {
        json row{{"suite", r.suite},
                 {"name", r.name},
                 {"samples", r.samples},
                 {"failures", r.failures}};
        if (r.failures > 0) row["first_counterexample"] = r.first_counterexample;
        if (r.info_count > 0) {
          row["info_count"] = r.info_count;
          row["info"] = r.info;
        }
        laws.push_back(std::move(row));
      }
      emit_structured("laws", inputs,
                      json{{"laws", laws},
                           {"all_pass", report.all_pass()},
                           {"total_failures", report.total_failures()}},
                      json::array());
    } else {
      std::uint64_t total_samples = 0;
      for (const LawResult& r : report.laws) {
        total_samples += r.samples;
        std::cout << "law " << r.suite << "/" << r.name << ": " << r.samples
                  << " samples, " << r.failures << " failures";
        if (r.info_count > 0) std::cout << " [recorded " << r.info_count << "; first: " << r.info << "]";
        std::cout << "\n";
        if (r.failures > 0)
          std::cout << "  first counterexample: " << r.first_counterexample << "\n";
      }
      std::cout << "result: " << report.laws.size() << " laws, " << total_samples
                << " samples, " << report.total_failures() << " failures\n";
    }
    return report.all_pass() ? kExitOk : kExitLaws;
  } catch (const std::exception& err) {
    return emit_error(opt, "laws", inputs, err);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal calculator below Gamma_0: Veblen normal forms, "
               "hyperexponentials and hyperlogarithms"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "structured", "json-like-structured"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Pseudo-random seed for the law runner")
      ->capture_default_str();
  app.add_option("--max-depth", opt.max_depth, "Sample nesting depth (at most 5)")
      ->capture_default_str();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression to canonical form");
  std::string eval_expr;
  bool show_vnf = false, show_cnf = false, show_whnf = false, show_pretty = false;
  eval_cmd->add_option("expr", eval_expr, "Ordinal expression")->required();
  eval_cmd->add_flag("--vnf", show_vnf, "Also print the Veblen normal form");
  eval_cmd->add_flag("--cnf", show_cnf, "Also print the Cantor normal form");
  eval_cmd->add_flag("--whnf", show_whnf, "Also print the hyperexponential normal form");
  eval_cmd->add_flag("--pretty", show_pretty, "Also print a Unicode rendering");

  auto* cmp_cmd = app.add_subcommand("cmp", "Compare two expressions");
  std::string cmp_lhs, cmp_rhs;
  cmp_cmd->add_option("lhs", cmp_lhs, "Left expression")->required();
  cmp_cmd->add_option("rhs", cmp_rhs, "Right expression")->required();

  auto* nf_cmd = app.add_subcommand("nf", "Print a normal form");
  std::string nf_style = "vnf";
  std::string nf_expr;
  nf_cmd->add_option("--style", nf_style, "cnf, vnf or whnf")
      ->check(CLI::IsMember({"cnf", "vnf", "whnf"}))
      ->capture_default_str();
  nf_cmd->add_option("expr", nf_expr, "Ordinal expression")->required();

  auto* exact_cmd =
      app.add_subcommand("exact", "Evaluate a g-exact sequence at sample indices");
  std::string exact_fn, exact_v0, exact_bound;
  std::vector<std::string> exact_points;
  exact_cmd->add_option("fn", exact_fn, "Hyperlogarithm base: l or L")
      ->required()
      ->check(CLI::IsMember({"l", "L"}));
  exact_cmd->add_option("v0", exact_v0, "Value of the sequence at index 0")->required();
  exact_cmd->add_option("points", exact_points, "Indices to evaluate")->required();
  exact_cmd->add_option("--bound", exact_bound,
                        "Exclusive domain bound (default: beyond the largest point)");

  auto* laws_cmd = app.add_subcommand("laws", "Run the algebraic law suites");
  std::uint64_t laws_samples = 1000;
  std::vector<std::string> laws_suites;
  laws_cmd->add_option("--samples", laws_samples, "Samples per law")->capture_default_str();
  laws_cmd->add_option("--suites", laws_suites, "Subset of suites to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitDomain;
  }

  if (eval_cmd->parsed())
    return cmd_eval(opt, eval_expr, show_vnf, show_cnf, show_whnf, show_pretty);
  if (cmp_cmd->parsed()) return cmd_cmp(opt, cmp_lhs, cmp_rhs);
  if (nf_cmd->parsed()) return cmd_nf(opt, nf_style, nf_expr);
  if (exact_cmd->parsed())
    return cmd_exact(opt, exact_fn, exact_v0, exact_points, exact_bound);
  if (laws_cmd->parsed()) return cmd_laws(opt, laws_samples, laws_suites);
  return kExitDomain;
}
