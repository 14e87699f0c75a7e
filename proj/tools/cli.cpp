#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cadlab/bench.hpp"
#include "cadlab/cad.hpp"
#include "cadlab/error.hpp"
#include "cadlab/formula.hpp"
#include "cadlab/heuristics.hpp"
#include "cadlab/json_io.hpp"
#include "cadlab/random_problems.hpp"
#include "cadlab/smtlib.hpp"

namespace cadlab::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

VarOrdering ordering_option(const Problem& p, const std::string& text) {
  if (text.empty()) return p.default_ordering();
  VarOrdering ord;
  try {
    ord = parse_ordering(text, p.vars);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--order: ") + e.what());
  }
  if (!respects_blocks(ord, p.nvars(), p.blocks)) throw UsageError("--order does not respect the quantifier blocks");
  return ord;
}

std::string projection_sequence(const VarOrdering& ord, const std::vector<std::string>& names) {
  std::string out;
  for (Var v : ord.projection_sequence()) out += (out.empty() ? "" : ", ") + names[v.id];
  return out;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::string score_text(const std::vector<std::int64_t>& s) {
  std::string out;
  for (auto x : s) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

// ---- parse ----

int cmd_parse(const std::string& file, const std::string& format, std::ostream& out) {
  Problem p = load_problem(file);
  if (format == "smt")
    out << emit_smtlib(p);
  else
    out << emit_json(p);
  return ok;
}

// ---- analyze ----

json report_json(const HeuristicReport& r, const Problem& p) {
  json cands = json::array();
  for (const auto& c : r.candidates) {
    json j = {{"score", c.score}};
    if (c.ordering) j["ordering"] = c.ordering->to_string(p.vars);
    if (c.variable) j["variable"] = p.vars[c.variable->id];
    cands.push_back(j);
  }
  return {{"heuristic", r.heuristic}, {"chosen", r.chosen.to_string(p.vars)}, {"tied", r.tied},
          {"tie_break", r.tie_break}, {"candidates", cands}};
}

void print_report(const HeuristicReport& r, const Problem& p, std::ostream& out) {
  out << r.heuristic << ": " << r.chosen.to_string(p.vars) << " (projects " << projection_sequence(r.chosen, p.vars)
      << ")";
  if (r.tied > 1) out << "  [" << r.tied << "-way tie, " << r.tie_break << "]";
  out << "\n";
  for (const auto& c : r.candidates) {
    out << "  ";
    if (c.ordering) out << c.ordering->to_string(p.vars);
    if (c.variable) out << p.vars[c.variable->id];
    out << ": " << score_text(c.score) << "\n";
  }
}

HeuristicReport heuristic_by_name(const std::string& h, const Problem& p, std::span<const Poly> polys) {
  if (h == "brown") return brown_order(polys, p.nvars(), p.blocks);
  if (h == "sotd") return order_by_sotd(polys, p.nvars(), p.blocks, SotdStrategy::exhaustive);
  if (h == "greedy-sotd") return order_by_sotd(polys, p.nvars(), p.blocks, SotdStrategy::greedy);
  if (h == "ndrr") return order_by_ndrr(polys, p.nvars(), p.blocks);
  if (h == "fulldim") return order_by_fulldim(polys, p.nvars(), p.blocks);
  throw UsageError("unknown heuristic '" + h + "'");
}

int cmd_analyze(const std::string& file, const std::string& heuristic, bool as_json, std::ostream& out) {
  Problem p = load_problem(file);
  const auto polys = p.polynomials();
  std::vector<std::string> names;
  if (heuristic == "all")
    names = {"brown", "sotd", "greedy-sotd", "ndrr", "fulldim"};
  else
    names = {heuristic};
  std::vector<HeuristicReport> reports;
  for (const auto& h : names) reports.push_back(heuristic_by_name(h, p, polys));
  const auto features = ml_features(polys, p.nvars());
  const auto feature_names = ml_feature_names(p.vars);
  if (as_json) {
    json j = {{"problem", p.name}, {"reports", json::array()}, {"tnoi", tnoi(polys)}};
    for (const auto& r : reports) j["reports"].push_back(report_json(r, p));
    for (std::size_t i = 0; i < features.size(); ++i) j["features"][feature_names[i]] = features[i];
    out << j.dump(2) << "\n";
    return ok;
  }
  out << "problem: " << p.name << "\n";
  for (const auto& r : reports) print_report(r, p, out);
  out << "tnoi: " << tnoi(polys) << "\n";
  out << "features:";
  for (std::size_t i = 0; i < features.size(); ++i) out << " " << feature_names[i] << "=" << features[i];
  out << "\n";
  return ok;
}

// ---- cad ----

ECDesignation pick_designation(const Problem& p, const std::vector<Poly>& polys, const VarOrdering& ord,
                               const std::string& wanted, Measure measure) {
  if (!p.formula) throw Error("ec mode needs a formula");
  const auto ecs = identify_ecs(*p.formula);
  if (ecs.empty()) throw Error("the formula has no equational constraints");
  const auto all = enumerate_designations(propagate_ecs(ecs, ord));
  if (wanted == "auto") {
    std::size_t best = 0, best_score = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto s = score_designation(polys, all[i], ord, measure);
      if (i == 0 || s < best_score) {
        best = i;
        best_score = s;
      }
    }
    return all[best];
  }
  for (const auto& d : all) {
    if (d.to_string() == wanted) return d;
    const std::size_t n = ord.size();
    if (n && d.labels.size() == n && d.labels[n - 1] == wanted) return d;
  }
  std::string choices;
  for (const auto& d : all) choices += (choices.empty() ? "" : ", ") + d.to_string();
  throw UsageError("unknown designation '" + wanted + "' (choices: " + choices + ")");
}

int cmd_cad(const std::string& file, const std::string& order, const std::string& mode, const std::string& designation,
            const std::string& measure, bool list_cells, bool as_json, std::ostream& out) {
  Problem p = load_problem(file);
  const auto polys = p.polynomials();
  const VarOrdering ord = ordering_option(p, order);
  CadOptions options;
  if (mode == "ec") {
    options.mode = CadMode::ec_reduced;
    options.designation = pick_designation(p, polys, ord, designation, measure == "ndrr" ? Measure::ndrr : Measure::sotd);
  }
  const auto start = std::chrono::steady_clock::now();
  const CADTree tree = build_cad(polys, ord, options);
  std::optional<FormulaEvaluation> eval;
  if (p.formula) eval = evaluate_formula_on_cells(tree, *p.formula);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (as_json) {
    json j = {{"problem", p.name},
              {"ordering", ord.to_string(p.vars)},
              {"mode", mode},
              {"designation", options.mode == CadMode::ec_reduced ? options.designation.to_string() : "none"},
              {"cells", tree.total()},
              {"fulldim_cells", tree.fulldim_count()},
              {"level_counts", tree.counts()},
              {"stack_sizes", tree.top_stack_sizes()},
              {"time_ms", ms}};
    json levels = json::array();
    for (std::size_t k = 1; k <= tree.projection.size(); ++k) {
      json l = json::array();
      for (const auto& q : tree.projection.level(k)) l.push_back(q.to_string(p.vars));
      levels.push_back(l);
    }
    j["projection"] = levels;
    if (eval) j["true_cells"] = eval->true_count;
    if (list_cells && tree.dimension()) {
      json cells = json::array();
      const auto& leaves = tree.leaves();
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        std::string signs;
        for (auto s : leaves[i].signs) signs += sign_char(s);
        json c = {{"index", leaves[i].index}, {"sample", leaves[i].sample_string()}, {"signs", signs}};
        if (eval) c["truth"] = static_cast<bool>(eval->truth[i]);
        cells.push_back(c);
      }
      j["leaves"] = cells;
    }
    out << j.dump(2) << "\n";
    return ok;
  }
  out << "problem: " << p.name << "\n";
  out << "ordering: " << ord.to_string(p.vars) << " (projects " << projection_sequence(ord, p.vars) << ")\n";
  out << "mode: " << mode << "\n";
  if (options.mode == CadMode::ec_reduced) out << "designation: " << options.designation.to_string() << "\n";
  for (std::size_t k = tree.projection.size(); k >= 1; --k) {
    out << "level " << k << " (" << p.vars[ord.level_var(k).id] << "):";
    for (const auto& q : tree.projection.level(k)) out << " [" << q.to_string(p.vars) << "]";
    out << "\n";
  }
  out << "cells per level: " << join(tree.counts()) << "\n";
  out << "stack sizes: " << join(tree.top_stack_sizes()) << "\n";
  out << "cells: " << tree.total() << "\n";
  out << "full-dimensional cells: " << tree.fulldim_count() << "\n";
  if (eval) out << "true cells: " << eval->true_count << "\n";
  if (list_cells && tree.dimension()) {
    const auto& leaves = tree.leaves();
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      std::string signs;
      for (auto s : leaves[i].signs) signs += sign_char(s);
      out << "  " << leaves[i].index_string() << " " << leaves[i].sample_string() << " " << signs;
      if (eval) out << (eval->truth[i] ? " true" : " false");
      out << "\n";
    }
  }
  return ok;
}

// ---- compare ----

int cmd_compare(const std::string& file, bool as_json, std::ostream& out) {
  Problem p = load_problem(file);
  const auto polys = p.polynomials();
  json rows = json::array();
  if (!as_json) out << "ordering,cells,fulldim_cells,sotd,ndrr,status\n";
  for (const auto& ord : admissible_orderings(p.nvars(), p.blocks)) {
    const auto levels = projection_levels(polys, ord);
    const auto sotd = sotd_value(levels);
    const auto ndrr = ndrr_value(levels);
    std::string status = "ok", cells, fulldim;
    try {
      const auto tree = build_cad(polys, ord);
      cells = std::to_string(tree.total());
      fulldim = std::to_string(tree.fulldim_count());
    } catch (const NotWellOriented&) {
      status = "not_well_oriented";
    }
    if (as_json) {
      json r = {{"ordering", ord.to_string(p.vars)}, {"sotd", sotd}, {"ndrr", ndrr}, {"status", status}};
      r["cells"] = cells.empty() ? json(nullptr) : json(std::stoul(cells));
      r["fulldim_cells"] = fulldim.empty() ? json(nullptr) : json(std::stoul(fulldim));
      rows.push_back(r);
    } else {
      out << "\"" << ord.to_string(p.vars) << "\"," << cells << "," << fulldim << "," << sotd << "," << ndrr << ","
          << status << "\n";
    }
  }
  if (as_json) out << json({{"problem", p.name}, {"orderings", rows}}).dump(2) << "\n";
  return ok;
}

// ---- gb-check ----

int cmd_gb_check(const std::string& file, const std::string& order, const std::string& monomial_order, bool with_cad,
                 std::ostream& out) {
  Problem p = load_problem(file);
  const VarOrdering ord = ordering_option(p, order);
  std::vector<Poly> equalities;
  std::vector<Poly> others;
  if (p.formula) {
    for (const auto& e : identify_ecs(*p.formula)) equalities.push_back(e.poly);
    for (const auto& q : p.polynomials())
      if (std::find(equalities.begin(), equalities.end(), q) == equalities.end()) others.push_back(q);
  } else {
    equalities = p.polynomials();
  }
  if (equalities.empty()) throw Error("no equational constraints to precondition");
  MonomialOrder mo = elimination_order(ord);
  if (monomial_order == "grlex") mo.kind = MonomialOrder::Kind::grlex;
  const auto d = gb_precondition_decision(equalities, mo);
  out << "problem: " << p.name << "\n";
  out << "monomial order: " << monomial_order << " (" << projection_sequence(ord, p.vars) << ")\n";
  out << "basis:";
  for (const auto& g : d.basis) out << " [" << g.to_string(p.vars) << "]";
  out << "\n";
  out << "tnoi before: " << d.before << "\n";
  out << "tnoi after: " << d.after << "\n";
  out << "use_gb: " << (d.use_gb ? "true" : "false") << "\n";
  if (with_cad) {
    std::vector<Poly> original = equalities, preconditioned = d.basis;
    original.insert(original.end(), others.begin(), others.end());
    preconditioned.insert(preconditioned.end(), others.begin(), others.end());
    out << "cells without basis: " << build_cad(original, ord).total() << "\n";
    out << "cells with basis: " << build_cad(preconditioned, ord).total() << "\n";
  }
  return ok;
}

// ---- gen ----

int cmd_gen(std::uint64_t seed, std::size_t count, const std::string& profile_path, const std::string& out_dir,
            const std::string& format, std::ostream& out) {
  const RandomProfile profile = profile_path.empty() ? RandomProfile{} : parse_profile(read_file(profile_path));
  const auto problems = random_problems(seed, count, profile);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (const auto& p : problems) {
      const bool smt = format == "smt";
      std::ofstream f(fs::path(out_dir) / (p.name + (smt ? ".smt2" : ".json")), std::ios::binary);
      f << (smt ? emit_smtlib(p) : emit_json(p));
    }
    out << "wrote " << problems.size() << " problems to " << out_dir << "\n";
    return ok;
  }
  if (format == "smt") {
    for (const auto& p : problems) out << emit_smtlib(p);
    return ok;
  }
  out << "[";
  for (std::size_t i = 0; i < problems.size(); ++i) {
    std::string text = emit_json(problems[i]);
    text.pop_back();
    out << (i ? ",\n" : "\n") << text;
  }
  out << (problems.empty() ? "]\n" : "\n]\n");
  return ok;
}

// ---- bench ----

struct BenchArgs {
  std::string dir, out = "report.csv", json_out, profile;
  std::uint64_t timeout = 0, seed = 0;
  std::size_t jobs = 1, random = 0;
  bool stable = false, no_orders = false, no_designations = false;
  std::vector<std::string> heuristics;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  std::vector<BenchInput> inputs;
  if (!a.dir.empty()) {
    if (!fs::is_directory(a.dir)) throw UsageError("not a directory: " + a.dir);
    inputs = load_corpus(a.dir);
  }
  if (a.random > 0) {
    const RandomProfile profile = a.profile.empty() ? RandomProfile{} : parse_profile(read_file(a.profile));
    for (auto& p : random_problems(a.seed, a.random, profile)) {
      BenchInput in;
      in.label = p.name;
      in.problem = std::move(p);
      inputs.push_back(std::move(in));
    }
  }
  BenchConfig config;
  if (!a.heuristics.empty()) config.heuristics = a.heuristics;
  config.all_orderings = !a.no_orders;
  config.designations = !a.no_designations;
  config.timeout_ms = a.timeout;
  config.jobs = a.jobs;
  config.stable = a.stable;
  const auto report = run_bench(inputs, config);
  {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + a.out);
    f << to_csv(report, a.stable);
  }
  if (!a.json_out.empty()) {
    std::ofstream f(a.json_out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + a.json_out);
    f << to_json(report, a.stable);
  }
  std::map<std::string, std::size_t> status_counts;
  for (const auto& r : report.rows) ++status_counts[r.status];
  out << "problems: " << inputs.size() << "\n";
  out << "rows: " << report.rows.size() << "\n";
  for (const auto& [s, c] : status_counts) out << "status " << s << ": " << c << "\n";
  for (const auto& h : config.heuristics) {
    auto it = report.unique_wins.find(h);
    out << "unique wins " << h << ": " << (it == report.unique_wins.end() ? 0 : it->second) << "\n";
  }
  out << "report: " << a.out << "\n";
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cadlab: cylindrical algebraic decomposition with ordering heuristics", "cadlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cadlab 0.1.0");

  std::string file, format = "json", heuristic = "all", order, mode = "sign", designation = "auto", measure = "sotd";
  std::string monomial_order = "lex";
  bool as_json = false, list_cells = false, all_orders = false, with_cad = false;

  auto* parse = app.add_subcommand("parse", "parse a problem file and print it in canonical form");
  parse->add_option("file", file, "problem file (.json or .smt2)")->required()->check(CLI::ExistingFile);
  parse->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "smt"}));

  auto* analyze = app.add_subcommand("analyze", "run ordering heuristics");
  analyze->add_option("file", file)->required()->check(CLI::ExistingFile);
  analyze->add_option("--heuristic", heuristic)->check(CLI::IsMember({"brown", "sotd", "greedy-sotd", "ndrr", "fulldim", "all"}));
  analyze->add_flag("--json", as_json, "print JSON");

  auto* cad = app.add_subcommand("cad", "build a CAD and report cell counts");
  cad->add_option("file", file)->required()->check(CLI::ExistingFile);
  cad->add_option("--order", order, "variable ordering lowest first, e.g. x,y (y projected first)");
  cad->add_option("--mode", mode)->check(CLI::IsMember({"sign", "ec"}));
  cad->add_option("--designation", designation, "auto or a designation label");
  cad->add_option("--measure", measure, "measure used by --designation auto")->check(CLI::IsMember({"sotd", "ndrr"}));
  cad->add_flag("--cells", list_cells, "list the cells of R^n");
  cad->add_flag("--json", as_json, "print JSON");

  auto* compare = app.add_subcommand("compare", "cell counts and measures for every admissible ordering");
  compare->add_option("file", file)->required()->check(CLI::ExistingFile);
  compare->add_flag("--all-orders", all_orders, "enumerate all admissible orderings (default)");
  compare->add_flag("--json", as_json, "print JSON");

  auto* gb = app.add_subcommand("gb-check", "Groebner preconditioning decision");
  gb->add_option("file", file)->required()->check(CLI::ExistingFile);
  gb->add_option("--order", order, "variable ordering lowest first");
  gb->add_option("--monomial-order", monomial_order)->check(CLI::IsMember({"lex", "grlex"}));
  gb->add_flag("--cad", with_cad, "also build both CADs");

  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::string profile, out_dir;
  auto* gen = app.add_subcommand("gen", "generate random problems");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--count", count)->required();
  gen->add_option("--profile", profile, "profile JSON file")->check(CLI::ExistingFile);
  gen->add_option("--out", out_dir, "write one file per problem into this directory");
  gen->add_option("--format", format)->check(CLI::IsMember({"json", "smt"}));

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "run heuristics and CADs over a corpus");
  bench->add_option("dir", ba.dir, "corpus directory");
  bench->add_option("--out", ba.out, "CSV report path");
  bench->add_option("--json", ba.json_out, "also write a JSON report");
  bench->add_option("--timeout", ba.timeout, "per-task timeout in milliseconds (0 = none)");
  bench->add_option("--jobs", ba.jobs, "worker threads")->check(CLI::PositiveNumber);
  auto* seed_opt = bench->add_option("--seed", ba.seed, "seed for --random (alone: 200 generated problems)");
  bench->add_option("--random", ba.random, "append this many generated problems");
  bench->add_option("--profile", ba.profile, "profile JSON for --random")->check(CLI::ExistingFile);
  bench->add_option("--heuristics", ba.heuristics, "heuristics to run")->delimiter(',');
  bench->add_flag("--stable", ba.stable, "leave the timing column empty");
  bench->add_flag("--no-orders", ba.no_orders, "skip the per-ordering rows");
  bench->add_flag("--no-designations", ba.no_designations, "skip the ec-mode rows");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (parse->parsed()) return cmd_parse(file, format, out);
    if (analyze->parsed()) return cmd_analyze(file, heuristic, as_json, out);
    if (cad->parsed()) return cmd_cad(file, order, mode, designation, measure, list_cells, as_json, out);
    if (compare->parsed()) return cmd_compare(file, as_json, out);
    if (gb->parsed()) return cmd_gb_check(file, order, monomial_order, with_cad, out);
    if (gen->parsed()) return cmd_gen(seed, count, profile, out_dir, format, out);
    if (bench->parsed()) {
      if (ba.dir.empty() && ba.random == 0 && seed_opt->count() > 0) ba.random = 200;
      if (ba.dir.empty() && ba.random == 0) throw UsageError("bench needs a corpus directory or --random");
      return cmd_bench(ba, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return computation_error;
  }
  return usage;
}

}  // namespace cadlab::cli
