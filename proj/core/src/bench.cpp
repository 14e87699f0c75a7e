#include "cadlab/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <json.hpp>
#include <set>
#include <thread>

#include "cadlab/cad.hpp"
#include "cadlab/deadline.hpp"
#include "cadlab/error.hpp"
#include "cadlab/heuristics.hpp"

namespace cadlab {

std::vector<BenchInput> load_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const auto ext = e.path().extension().string();
    if (ext == ".json" || ext == ".smt2" || ext == ".smt") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchInput> out;
  for (const auto& f : files) {
    BenchInput in;
    in.label = f.filename().string();
    try {
      in.problem = load_problem(f);
    } catch (const std::exception& e) {
      in.load_error = e.what();
    }
    out.push_back(std::move(in));
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  std::optional<std::size_t> cells, fulldim;
  double time_ms = 0;
  std::string status = "ok";
  std::string message;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs f under the configured deadline and classifies failures.
template <class F>
Outcome guarded(const BenchConfig& config, F&& f) {
  Outcome o;
  const auto start = Clock::now();
  try {
    std::optional<ScopedDeadline> deadline;
    if (config.timeout_ms) deadline.emplace(std::chrono::milliseconds(config.timeout_ms));
    f(o);
  } catch (const Timeout& e) {
    o = {};
    o.status = "timeout";
    o.message = e.what();
  } catch (const NotWellOriented& e) {
    o = {};
    o.status = "not_well_oriented";
    o.message = e.what();
  } catch (const std::exception& e) {
    o = {};
    o.status = "error";
    o.message = e.what();
  }
  o.time_ms = elapsed_ms(start);
  return o;
}

BenchRow make_row(const std::string& problem, const std::string& heuristic, const std::string& ordering,
                  const Outcome& o) {
  BenchRow r;
  r.problem = problem;
  r.heuristic = heuristic;
  r.ordering = ordering;
  r.cells = o.cells;
  r.fulldim_cells = o.fulldim;
  r.time_ms = o.time_ms;
  r.status = o.status;
  r.message = o.message;
  return r;
}

HeuristicReport run_heuristic(const std::string& h, const Problem& p, std::span<const Poly> polys) {
  if (h == "brown") return brown_order(polys, p.nvars(), p.blocks);
  if (h == "sotd") return order_by_sotd(polys, p.nvars(), p.blocks, SotdStrategy::exhaustive);
  if (h == "greedy-sotd") return order_by_sotd(polys, p.nvars(), p.blocks, SotdStrategy::greedy);
  if (h == "ndrr") return order_by_ndrr(polys, p.nvars(), p.blocks);
  if (h == "fulldim") return order_by_fulldim(polys, p.nvars(), p.blocks);
  throw DomainError("unknown heuristic '" + h + "'");
}

std::vector<BenchRow> bench_one(const BenchInput& input, const BenchConfig& config) {
  std::vector<BenchRow> rows;
  if (!input.problem) {
    Outcome o;
    o.status = "error";
    o.message = input.load_error;
    rows.push_back(make_row(input.label, "-", "", o));
    rows.back().time_ms.reset();
    return rows;
  }
  const Problem& p = *input.problem;
  const std::string name = p.name.empty() ? input.label : p.name;
  const auto polys = p.polynomials();

  std::map<VarOrdering, Outcome> cache;
  auto cad_for = [&](const VarOrdering& ord) -> const Outcome& {
    auto it = cache.find(ord);
    if (it != cache.end()) return it->second;
    Outcome o = guarded(config, [&](Outcome& out) {
      auto tree = build_cad(polys, ord);
      out.cells = tree.total();
      out.fulldim = tree.fulldim_count();
    });
    return cache.emplace(ord, o).first->second;
  };

  if (config.all_orderings) {
    std::vector<VarOrdering> orderings;
    Outcome enum_failure = guarded(config, [&](Outcome&) { orderings = admissible_orderings(p.nvars(), p.blocks); });
    if (enum_failure.status != "ok") rows.push_back(make_row(name, "order", "", enum_failure));
    for (const auto& ord : orderings) rows.push_back(make_row(name, "order", ord.to_string(p.vars), cad_for(ord)));
  }

  for (const auto& h : config.heuristics) {
    std::optional<VarOrdering> chosen;
    Outcome ho = guarded(config, [&](Outcome&) { chosen = run_heuristic(h, p, polys).chosen; });
    if (!chosen) {
      rows.push_back(make_row(name, h, "", ho));
      continue;
    }
    Outcome o = cad_for(*chosen);
    o.time_ms = ho.time_ms;
    rows.push_back(make_row(name, h, chosen->to_string(p.vars), o));
  }

  if (config.designations && p.formula) {
    const auto ecs = identify_ecs(*p.formula);
    if (!ecs.empty()) {
      const VarOrdering ord = p.default_ordering();
      for (const Measure m : {Measure::sotd, Measure::ndrr}) {
        ECDesignation best;
        Outcome o = guarded(config, [&](Outcome& out) {
          const auto ds = enumerate_designations(propagate_ecs(ecs, ord));
          std::optional<std::size_t> best_score;
          for (const auto& d : ds) {
            const auto s = score_designation(polys, d, ord, m);
            if (!best_score || s < *best_score) {
              best_score = s;
              best = d;
            }
          }
          auto tree = build_cad(polys, ord, {CadMode::ec_reduced, best});
          out.cells = tree.total();
          out.fulldim = tree.fulldim_count();
        });
        BenchRow row = make_row(name, m == Measure::sotd ? "designation-sotd" : "designation-ndrr", ord.to_string(p.vars), o);
        row.mode = "ec";
        row.designation = best.by_level.empty() ? "none" : best.to_string();
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

const std::set<std::string> kOrderingHeuristics{"brown", "sotd", "greedy-sotd", "ndrr", "fulldim"};

}  // namespace

std::map<std::string, std::size_t> unique_wins(const std::vector<BenchRow>& rows) {
  std::map<std::string, std::size_t> wins;
  std::map<std::string, std::vector<const BenchRow*>> by_problem;
  for (const auto& r : rows)
    if (kOrderingHeuristics.count(r.heuristic) && r.status == "ok" && r.cells) by_problem[r.problem].push_back(&r);
  for (const auto& [problem, rs] : by_problem) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (const auto* r : rs) best = std::min(best, *r->cells);
    std::vector<const BenchRow*> winners;
    for (const auto* r : rs)
      if (*r->cells == best) winners.push_back(r);
    if (winners.size() == 1) ++wins[winners[0]->heuristic];
  }
  return wins;
}

BenchReport run_bench(const std::vector<BenchInput>& inputs, const BenchConfig& config) {
  std::vector<std::vector<BenchRow>> per_input(inputs.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, inputs.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) per_input[i] = bench_one(inputs[i], config);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) per_input[i] = bench_one(inputs[i], config);
      });
    for (auto& th : pool) th.join();
  }
  BenchReport report;
  for (auto& rows : per_input)
    for (auto& r : rows) report.rows.push_back(std::move(r));
  report.unique_wins = unique_wins(report.rows);
  return report;
}

std::string to_csv(const BenchReport& report, bool stable) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : report.rows) {
    out += csv_field(r.problem) + "," + csv_field(r.heuristic) + "," + csv_field(r.ordering) + "," +
           csv_field(r.designation) + "," + csv_field(r.mode) + "," + (r.cells ? std::to_string(*r.cells) : "") + "," +
           (r.fulldim_cells ? std::to_string(*r.fulldim_cells) : "") + "," +
           (!stable && r.time_ms ? format_ms(*r.time_ms) : "") + "," + r.status + "\n";
  }
  return out;
}

std::string to_json(const BenchReport& report, bool stable) {
  using nlohmann::json;
  json rows = json::array();
  for (const auto& r : report.rows) {
    json j = {{"problem", r.problem}, {"heuristic", r.heuristic}, {"ordering", r.ordering},
              {"designation", r.designation}, {"mode", r.mode}, {"status", r.status}};
    j["cells"] = r.cells ? json(*r.cells) : json(nullptr);
    j["fulldim_cells"] = r.fulldim_cells ? json(*r.fulldim_cells) : json(nullptr);
    if (!stable) j["time_ms"] = r.time_ms ? json(*r.time_ms) : json(nullptr);
    if (!r.message.empty()) j["message"] = r.message;
    rows.push_back(std::move(j));
  }
  json out = {{"rows", rows}, {"unique_wins", report.unique_wins}};
  return out.dump(2) + "\n";
}

std::vector<BenchRow> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(fields));
      fields.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (any) {
    fields.push_back(std::move(field));
    records.push_back(std::move(fields));
  }
  std::vector<BenchRow> rows;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i];
    if (f.size() != 9) throw ParseError("row " + std::to_string(i + 1), "expected 9 fields");
    BenchRow r;
    r.problem = f[0];
    r.heuristic = f[1];
    r.ordering = f[2];
    r.designation = f[3];
    r.mode = f[4];
    if (!f[5].empty()) r.cells = std::stoul(f[5]);
    if (!f[6].empty()) r.fulldim_cells = std::stoul(f[6]);
    if (!f[7].empty()) r.time_ms = std::stod(f[7]);
    r.status = f[8];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace cadlab
