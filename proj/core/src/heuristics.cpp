#include "cadlab/heuristics.hpp"

#include <algorithm>

#include "cadlab/cad.hpp"
#include "cadlab/deadline.hpp"
#include "cadlab/polyarith.hpp"
#include "cadlab/realroots.hpp"

namespace cadlab {

namespace {

std::size_t sotd_of(std::span<const Poly> polys) {
  std::size_t s = 0;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) s += t.first.total_degree();
  return s;
}

// Picks the lexicographically smallest score; the first candidate wins ties.
void settle(HeuristicReport& r) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.candidates.size(); ++i)
    if (r.candidates[i].score < r.candidates[best].score) best = i;
  r.tied = static_cast<std::size_t>(std::count_if(r.candidates.begin(), r.candidates.end(), [&](const auto& c) {
    return c.score == r.candidates[best].score;
  }));
  r.tie_break = r.tied > 1 ? "first candidate in lexicographic order (declared order)" : "";
  r.chosen = *r.candidates[best].ordering;
}

template <class Score>
HeuristicReport exhaustive(const std::string& name, std::size_t nvars, std::span<const QuantifierBlock> blocks,
                           Score score) {
  HeuristicReport r;
  r.heuristic = name;
  for (const auto& ord : admissible_orderings(nvars, blocks)) {
    check_deadline();
    r.candidates.push_back({ord, std::nullopt, {static_cast<std::int64_t>(score(ord))}});
  }
  settle(r);
  return r;
}

}  // namespace

HeuristicReport brown_order(std::span<const Poly> a, std::size_t nvars, std::span<const QuantifierBlock> blocks) {
  const auto stats = degree_stats(a, nvars);
  auto key = [&](Var v) -> std::vector<std::int64_t> {
    const auto& s = stats[v.id];
    return {s.overall_degree, s.max_term_total_degree, static_cast<std::int64_t>(s.term_count)};
  };
  HeuristicReport r;
  r.heuristic = "brown";
  for (std::size_t i = 0; i < nvars; ++i) r.candidates.push_back({std::nullopt, Var{i}, key(Var{i})});

  std::vector<Var> low_to_high;
  std::size_t ties = 0;
  for (auto group : ordering_groups(nvars, blocks)) {
    // eliminated first = highest position; sort descending so that smaller keys end up high
    std::sort(group.begin(), group.end(), [&](Var x, Var y) {
      const auto kx = key(x), ky = key(y);
      if (kx != ky) return kx > ky;
      return x < y;
    });
    for (std::size_t i = 0; i + 1 < group.size(); ++i)
      if (key(group[i]) == key(group[i + 1])) ++ties;
    low_to_high.insert(low_to_high.end(), group.begin(), group.end());
  }
  r.chosen = VarOrdering(low_to_high);
  r.tied = ties + 1;
  r.tie_break = ties ? "declared variable order" : "";
  return r;
}

std::size_t sotd_value(const ProjectionLevels& levels) {
  std::size_t s = 0;
  for (const auto& l : levels.levels) s += sotd_of(l);
  return s;
}

std::size_t ndrr_value(const ProjectionLevels& levels) {
  if (levels.levels.empty()) return 0;
  std::vector<Poly> uni;
  const Var v = levels.ordering.level_var(1);
  for (const auto& p : levels.level(1)) {
    std::vector<std::size_t> idx(p.nvars(), Poly::npos);
    idx[v.id] = 0;
    uni.push_back(p.remap(idx, 1));
  }
  return count_distinct_real_roots(uni);
}

HeuristicReport order_by_sotd(std::span<const Poly> a, std::size_t nvars, std::span<const QuantifierBlock> blocks,
                              SotdStrategy strategy) {
  if (strategy == SotdStrategy::exhaustive)
    return exhaustive("sotd", nvars, blocks, [&](const VarOrdering& ord) { return sotd_value(projection_levels(a, ord)); });

  HeuristicReport r;
  r.heuristic = "greedy-sotd";
  std::vector<Poly> current;
  for (const auto& p : a) insert_normalized(current, p);
  auto groups = ordering_groups(nvars, blocks);
  std::vector<Var> eliminated;  // first projected first
  for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
    std::vector<Var> remaining = *g;
    while (!remaining.empty()) {
      check_deadline();
      std::optional<std::size_t> best;
      std::vector<Poly> best_set;
      std::int64_t best_inc = 0;
      // try the highest declared index first so it wins ties
      std::sort(remaining.begin(), remaining.end(), [](Var x, Var y) { return x > y; });
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        const Var v = remaining[i];
        std::vector<Poly> with_v, next;
        for (const auto& p : current) (p.contains(v) ? with_v : next).push_back(p);
        std::vector<Poly> added;
        for (const auto& q : mccallum_project(with_v, v))
          if (std::find(next.begin(), next.end(), q) == next.end()) {
            added.push_back(q);
            next.push_back(q);
          }
        const auto inc = static_cast<std::int64_t>(sotd_of(added));
        r.candidates.push_back({std::nullopt, v, {static_cast<std::int64_t>(eliminated.size()), inc}});
        if (!best || inc < best_inc) {
          best = i;
          best_inc = inc;
          best_set = std::move(next);
        }
      }
      eliminated.push_back(remaining[*best]);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(*best));
      current = std::move(best_set);
    }
  }
  r.chosen = VarOrdering(std::vector<Var>(eliminated.rbegin(), eliminated.rend()));
  return r;
}

HeuristicReport order_by_ndrr(std::span<const Poly> a, std::size_t nvars, std::span<const QuantifierBlock> blocks) {
  return exhaustive("ndrr", nvars, blocks, [&](const VarOrdering& ord) { return ndrr_value(projection_levels(a, ord)); });
}

HeuristicReport order_by_fulldim(std::span<const Poly> a, std::size_t nvars, std::span<const QuantifierBlock> blocks) {
  return exhaustive("fulldim", nvars, blocks, [&](const VarOrdering& ord) { return open_cad_fulldim(a, ord); });
}

std::size_t tnoi(std::span<const Poly> a) {
  std::size_t n = 0;
  for (const auto& p : a) n += p.variables().size();
  return n;
}

MonomialOrder elimination_order(const VarOrdering& ord) { return MonomialOrder::lex(ord.projection_sequence()); }

GbDecision gb_precondition_decision(std::span<const Poly> equalities, const MonomialOrder& order) {
  GbDecision d;
  d.basis = buchberger(equalities, order);
  d.before = tnoi(equalities);
  d.after = tnoi(d.basis);
  d.use_gb = d.after < d.before;
  return d;
}

std::vector<double> ml_features(std::span<const Poly> a, std::size_t nvars) {
  std::size_t monomials = 0;
  std::uint32_t max_total = 0;
  std::vector<std::uint32_t> max_deg(nvars, 0);
  std::vector<std::size_t> mono_with(nvars, 0), poly_with(nvars, 0);
  for (const auto& p : a) {
    for (const auto& [m, c] : p.terms()) {
      ++monomials;
      max_total = std::max(max_total, m.total_degree());
      for (std::size_t i = 0; i < nvars; ++i)
        if (m[i]) {
          ++mono_with[i];
          max_deg[i] = std::max(max_deg[i], m[i]);
        }
    }
    for (std::size_t i = 0; i < nvars; ++i)
      if (p.contains(Var{i})) ++poly_with[i];
  }
  std::vector<double> f;
  for (std::size_t i = 0; i < nvars; ++i) {
    f.push_back(max_deg[i]);
    f.push_back(monomials ? static_cast<double>(mono_with[i]) / static_cast<double>(monomials) : 0.0);
    f.push_back(a.empty() ? 0.0 : static_cast<double>(poly_with[i]) / static_cast<double>(a.size()));
  }
  f.push_back(static_cast<double>(a.size()));
  f.push_back(static_cast<double>(nvars));
  f.push_back(max_total);
  return f;
}

std::vector<std::string> ml_feature_names(std::span<const std::string> names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    out.push_back("max_degree_" + n);
    out.push_back("monomial_share_" + n);
    out.push_back("polynomial_share_" + n);
  }
  out.insert(out.end(), {"polynomials", "variables", "max_total_degree"});
  return out;
}

}  // namespace cadlab
