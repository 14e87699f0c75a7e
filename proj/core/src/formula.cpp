#include "cadlab/formula.hpp"

#include <algorithm>

#include "cadlab/error.hpp"
#include "cadlab/heuristics.hpp"
#include "cadlab/polyarith.hpp"

namespace cadlab {

const char* to_string(Rel r) {
  switch (r) {
    case Rel::eq: return "=";
    case Rel::ne: return "!=";
    case Rel::lt: return "<";
    case Rel::le: return "<=";
    case Rel::gt: return ">";
    case Rel::ge: return ">=";
  }
  return "?";
}

Rel parse_rel(const std::string& s) {
  if (s == "=" || s == "==") return Rel::eq;
  if (s == "!=" || s == "<>" || s == "distinct") return Rel::ne;
  if (s == "<") return Rel::lt;
  if (s == "<=") return Rel::le;
  if (s == ">") return Rel::gt;
  if (s == ">=") return Rel::ge;
  throw DomainError("unknown relation '" + s + "'");
}

bool holds(Rel r, int s) {
  switch (r) {
    case Rel::eq: return s == 0;
    case Rel::ne: return s != 0;
    case Rel::lt: return s < 0;
    case Rel::le: return s <= 0;
    case Rel::gt: return s > 0;
    case Rel::ge: return s >= 0;
  }
  return false;
}

Formula Formula::make_false() {
  Formula f;
  f.kind = Kind::falsity;
  return f;
}

Formula Formula::atom(Poly p, Rel r, std::string name) {
  Formula f;
  f.kind = Kind::atom;
  f.poly = std::move(p);
  f.rel = r;
  f.name = std::move(name);
  return f;
}

Formula Formula::conjunction(std::vector<Formula> args) {
  Formula f;
  f.kind = Kind::conj;
  f.args = std::move(args);
  return f;
}

Formula Formula::disjunction(std::vector<Formula> args) {
  Formula f;
  f.kind = Kind::disj;
  f.args = std::move(args);
  return f;
}

Formula Formula::negation(Formula g) {
  Formula f;
  f.kind = Kind::neg;
  f.args.push_back(std::move(g));
  return f;
}

namespace {

Rel negate(Rel r) {
  switch (r) {
    case Rel::eq: return Rel::ne;
    case Rel::ne: return Rel::eq;
    case Rel::lt: return Rel::ge;
    case Rel::le: return Rel::gt;
    case Rel::gt: return Rel::le;
    case Rel::ge: return Rel::lt;
  }
  return r;
}

Formula nnf_impl(const Formula& f, bool negated) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::truth: return negated ? Formula::make_false() : f;
    case K::falsity: return negated ? Formula::make_true() : f;
    case K::atom: return negated ? Formula::atom(f.poly, negate(f.rel), f.name) : f;
    case K::neg: return nnf_impl(f.args.at(0), !negated);
    case K::conj:
    case K::disj: {
      const K k = (f.kind == K::conj) != negated ? K::conj : K::disj;
      std::vector<Formula> args;
      for (const auto& a : f.args) {
        Formula g = nnf_impl(a, negated);
        if (g.kind == k) {
          for (auto& h : g.args) args.push_back(std::move(h));
        } else {
          args.push_back(std::move(g));
        }
      }
      Formula out;
      out.kind = k;
      out.args = std::move(args);
      return out;
    }
  }
  return f;
}

void collect_atoms(const Formula& f, std::vector<Poly>& out) {
  if (f.is_atom()) {
    if (!f.poly.is_constant() && std::find(out.begin(), out.end(), f.poly) == out.end()) out.push_back(f.poly);
    return;
  }
  for (const auto& a : f.args) collect_atoms(a, out);
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_impl(f, false); }

std::vector<Poly> atom_polynomials(const Formula& f) {
  std::vector<Poly> out;
  collect_atoms(f, out);
  return out;
}

bool evaluate(const Formula& f, const std::function<int(const Poly&)>& sign_of) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::truth: return true;
    case K::falsity: return false;
    case K::atom:
      return holds(f.rel, f.poly.is_constant() ? sign(f.poly.constant_value()) : sign_of(f.poly));
    case K::neg: return !evaluate(f.args.at(0), sign_of);
    case K::conj:
      return std::all_of(f.args.begin(), f.args.end(), [&](const Formula& a) { return evaluate(a, sign_of); });
    case K::disj:
      return std::any_of(f.args.begin(), f.args.end(), [&](const Formula& a) { return evaluate(a, sign_of); });
  }
  return false;
}

std::string to_string(const Formula& f, std::span<const std::string> names) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::truth: return "true";
    case K::falsity: return "false";
    case K::atom: return f.poly.to_string(names) + " " + to_string(f.rel) + " 0";
    case K::neg: return "not (" + to_string(f.args.at(0), names) + ")";
    case K::conj:
    case K::disj: {
      if (f.args.empty()) return f.kind == K::conj ? "true" : "false";
      std::string out;
      for (std::size_t i = 0; i < f.args.size(); ++i) {
        if (i) out += f.kind == K::conj ? " and " : " or ";
        const bool wrap = !f.args[i].is_atom() && !f.args[i].args.empty();
        out += wrap ? "(" + to_string(f.args[i], names) + ")" : to_string(f.args[i], names);
      }
      return out;
    }
  }
  return {};
}

std::vector<NamedEC> identify_ecs(const Formula& f) {
  const Formula g = nnf(f);
  std::vector<const Formula*> conjuncts;
  if (g.kind == Formula::Kind::conj) {
    for (const auto& a : g.args) conjuncts.push_back(&a);
  } else {
    conjuncts.push_back(&g);
  }
  std::vector<NamedEC> out;
  std::vector<Poly> seen;
  for (const Formula* c : conjuncts) {
    if (!c->is_atom() || c->rel != Rel::eq || c->poly.is_constant()) continue;
    Poly key = normalize(c->poly);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    out.push_back({c->poly, c->name.empty() ? "ec" + std::to_string(out.size() + 1) : c->name});
  }
  return out;
}

ECCandidates propagate_ecs(std::span<const NamedEC> ecs, const VarOrdering& ord) {
  ECCandidates out;
  out.by_level.assign(ord.size(), {});
  auto place = [&](const Poly& p, const std::string& label) {
    if (p.is_constant()) return;
    const Poly key = normalize(squarefree_part(p));
    const std::size_t k = main_level(key, ord);
    auto& bucket = out.by_level[k - 1];
    for (const auto& c : bucket)
      if (normalize(squarefree_part(c.poly)) == key) return;
    bucket.push_back({p, label});
  };
  for (const auto& e : ecs) place(e.poly, e.label);
  for (std::size_t k = ord.size(); k >= 2; --k) {
    const auto level = out.by_level[k - 1];
    const Var v = ord.level_var(k);
    for (std::size_t i = 0; i < level.size(); ++i)
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        Poly r = resultant(level[i].poly, level[j].poly, v);
        if (r.is_zero()) continue;
        place(normalize(squarefree_part(r)), "res(" + level[i].label + "," + level[j].label + ")");
      }
  }
  return out;
}

std::vector<ECDesignation> enumerate_designations(const ECCandidates& candidates) {
  const std::size_t n = candidates.by_level.size();
  std::size_t total = 1;
  for (const auto& level : candidates.by_level) {
    total *= std::max<std::size_t>(1, level.size());
    if (total > kMaxDesignations)
      throw DomainError("designation count exceeds the cap of " + std::to_string(kMaxDesignations));
  }
  std::vector<ECDesignation> out;
  std::vector<std::size_t> choice(n, 0);
  for (std::size_t count = 0; count < total; ++count) {
    ECDesignation d;
    d.by_level.assign(n, std::nullopt);
    d.labels.assign(n, "");
    for (std::size_t k = 0; k < n; ++k) {
      if (candidates.by_level[k].empty()) continue;
      d.by_level[k] = candidates.by_level[k][choice[k]].poly;
      d.labels[k] = candidates.by_level[k][choice[k]].label;
    }
    out.push_back(std::move(d));
    // odometer, top level varies fastest
    for (std::size_t k = n; k-- > 0;) {
      const std::size_t size = std::max<std::size_t>(1, candidates.by_level[k].size());
      if (++choice[k] < size) break;
      choice[k] = 0;
    }
  }
  return out;
}

std::size_t score_designation(std::span<const Poly> a, const ECDesignation& d, const VarOrdering& ord, Measure m) {
  const auto levels = projection_levels(a, ord, &d);
  return m == Measure::sotd ? sotd_value(levels) : ndrr_value(levels);
}

}  // namespace cadlab
