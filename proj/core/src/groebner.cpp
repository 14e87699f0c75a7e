#include "cadlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cadlab/deadline.hpp"

namespace cadlab {

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind == Kind::grlex) {
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da <=> db;
  }
  if (priority.empty()) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  for (Var v : priority)
    if (a.degree(v) != b.degree(v)) return a.degree(v) <=> b.degree(v);
  return std::strong_ordering::equal;
}

namespace {

struct Desc {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->compare(a, b) > 0; }
};

using Work = std::map<Monomial, Rational, Desc>;

Work to_work(const Poly& p, const MonomialOrder& ord) {
  Work w(Desc{&ord});
  for (const auto& [m, c] : p.terms()) w.emplace(m, c);
  return w;
}

Poly from_work(std::size_t nvars, const Work& w) {
  std::vector<Poly::Term> terms(w.begin(), w.end());
  return Poly::from_terms(nvars, std::move(terms));
}

// Leading data of a divisor, cached.
struct Divisor {
  Monomial lm;
  Rational lc;
  std::vector<Poly::Term> terms;
};

Divisor make_divisor(const Poly& g, const MonomialOrder& ord) {
  Divisor d;
  d.terms = g.terms();
  std::sort(d.terms.begin(), d.terms.end(), [&](const auto& a, const auto& b) { return ord.compare(a.first, b.first) > 0; });
  d.lm = d.terms.front().first;
  d.lc = d.terms.front().second;
  return d;
}

void subtract_multiple(Work& w, const Divisor& d, const Monomial& shift, const Rational& factor) {
  for (const auto& [m, c] : d.terms) {
    Monomial mm = m * shift;
    auto [it, inserted] = w.try_emplace(mm, 0);
    it->second -= factor * c;
    if (it->second == 0) w.erase(it);
  }
}

Poly reduce(const Poly& p, const std::vector<Divisor>& g, const MonomialOrder& ord) {
  Work w = to_work(p, ord);
  Work rem(Desc{&ord});
  while (!w.empty()) {
    check_deadline();
    auto it = w.begin();
    const Monomial m = it->first;
    const Rational c = it->second;
    bool divided = false;
    for (const auto& d : g) {
      if (d.lm.divides(m)) {
        subtract_multiple(w, d, m / d.lm, c / d.lc);
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem.emplace(m, c);
      w.erase(it);
    }
  }
  return from_work(p.nvars(), rem);
}

Poly monic(const Poly& p, const MonomialOrder& ord) { return p * Rational(1 / leading_coefficient(p, ord)); }

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  const Monomial lf = leading_monomial(f, ord), lg = leading_monomial(g, ord);
  const Monomial l = Monomial::lcm(lf, lg);
  const Poly a = Poly::monomial(l / lf, 1 / leading_coefficient(f, ord));
  const Poly b = Poly::monomial(l / lg, 1 / leading_coefficient(g, ord));
  return a * f - b * g;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace

Monomial leading_monomial(const Poly& p, const MonomialOrder& ord) {
  const Monomial* best = &p.terms().front().first;
  for (const auto& t : p.terms())
    if (ord.compare(t.first, *best) > 0) best = &t.first;
  return *best;
}

Rational leading_coefficient(const Poly& p, const MonomialOrder& ord) {
  const Poly::Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (ord.compare(t.first, best->first) > 0) best = &t;
  return best->second;
}

Poly normal_form(const Poly& p, std::span<const Poly> g, const MonomialOrder& ord) {
  std::vector<Divisor> ds;
  for (const auto& q : g)
    if (!q.is_zero()) ds.push_back(make_divisor(q, ord));
  return reduce(p, ds, ord);
}

std::vector<Poly> buchberger(std::span<const Poly> e, const MonomialOrder& ord) {
  std::vector<Poly> g;
  std::size_t nvars = 0;
  for (const auto& p : e) {
    nvars = p.nvars();
    if (p.is_zero()) continue;
    if (p.is_constant()) return {Poly::constant(p.nvars(), 1)};
    g.push_back(monic(p, ord));
  }
  if (g.empty()) return {};

  std::vector<Monomial> lms;
  std::vector<Divisor> divs;
  for (const auto& p : g) {
    lms.push_back(leading_monomial(p, ord));
    divs.push_back(make_divisor(p, ord));
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);

  auto pending = [&](std::size_t a, std::size_t b) { return pairs.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pairs.empty()) {
    check_deadline();
    // normal strategy: smallest lcm first
    auto best = pairs.begin();
    Monomial best_lcm = Monomial::lcm(lms[best->first], lms[best->second]);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = Monomial::lcm(lms[it->first], lms[it->second]);
      if (ord.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);
    if (coprime(lms[i], lms[j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k)
      if (k != i && k != j && lms[k].divides(best_lcm) && !pending(i, k) && !pending(j, k)) chain = true;
    if (chain) continue;

    Poly r = reduce(s_polynomial(g[i], g[j], ord), divs, ord);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {Poly::constant(nvars, 1)};
    r = monic(r, ord);
    const std::size_t k = g.size();
    g.push_back(r);
    lms.push_back(leading_monomial(r, ord));
    divs.push_back(make_divisor(r, ord));
    for (std::size_t a = 0; a < k; ++a) pairs.emplace(a, k);
  }

  // minimal basis
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b || !lms[b].divides(lms[a])) continue;
      redundant = lms[a] != lms[b] || b < a;
    }
    if (!redundant) keep.push_back(a);
  }
  std::vector<Poly> minimal;
  for (auto a : keep) minimal.push_back(g[a]);

  // interreduce
  std::vector<Poly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Poly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    reduced.push_back(monic(normal_form(minimal[a], others, ord), ord));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return ord.compare(leading_monomial(a, ord), leading_monomial(b, ord)) > 0;
  });
  return reduced;
}

}  // namespace cadlab
