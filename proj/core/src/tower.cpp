// Exact sign determination and fiber root isolation at points whose
// coordinates are real algebraic numbers.
//
// A point (a_0, ..., a_{m-1}) is handled as a tower: every coordinate keeps its
// own univariate defining polynomial. Zero tests of q(a) run a Euclidean
// algorithm in the last coordinate whose leading coefficients are decided
// recursively on the shorter prefix; nonzero signs come from interval
// evaluation with adaptive refinement.

#include <algorithm>

#include "cadlab/deadline.hpp"
#include "cadlab/error.hpp"
#include "cadlab/polyarith.hpp"
#include "cadlab/realroots.hpp"

namespace cadlab {
namespace {

struct Interval {
  Rational lo, hi;
};

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval scale(const Interval& a, const Rational& c) {
  if (c >= 0) return {a.lo * c, a.hi * c};
  return {a.hi * c, a.lo * c};
}

Interval power(const Interval& a, std::uint32_t e) {
  if (e == 0) return {1, 1};
  Interval r = a;
  for (std::uint32_t i = 1; i < e; ++i) r = r * a;
  if (e % 2 == 0 && a.lo < 0 && a.hi > 0) r.lo = 0;
  return r;
}

Interval box_of(const AlgebraicNumber& a) {
  if (auto q = a.rational_value()) return {*q, *q};
  return {a.lo(), a.hi()};
}

Interval evaluate(const Poly& q, std::span<const Interval> box) {
  std::vector<std::vector<Interval>> powers(box.size());
  Interval sum{0, 0};
  for (const auto& [m, c] : q.terms()) {
    Interval t{1, 1};
    for (std::size_t i = 0; i < box.size(); ++i) {
      auto e = m[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.size() <= e) {
        if (cache.empty()) cache.push_back({1, 1});
        while (cache.size() <= e) cache.push_back(power(box[i], static_cast<std::uint32_t>(cache.size())));
      }
      t = t * cache[e];
    }
    sum = sum + scale(t, c);
  }
  return sum;
}

Poly monic(const Poly& p, Var v) {
  return p * Rational(1 / p.leading_coefficient(v).constant_value());
}

Poly var_power(std::size_t nvars, Var v, std::uint32_t e) {
  return Poly::monomial(Monomial::power(nvars, v, e), Rational(1));
}

class Tower {
 public:
  Tower(std::vector<AlgebraicNumber> coords, std::size_t nvars) : coords_(std::move(coords)), nvars_(nvars) {
    for (std::size_t i = 0; i < coords_.size(); ++i) minpolys_.push_back(minpoly(i));
  }

  int sign(const Poly& q) { return sign_prefix(q, coords_.size()); }
  const std::vector<AlgebraicNumber>& coords() const { return coords_; }
  const Poly& minpoly_of(std::size_t i) const { return minpolys_[i]; }

 private:
  Poly minpoly(std::size_t i) const { return monic(coords_[i].poly().to_poly(nvars_, Var{i}), Var{i}); }

  void bisect(std::size_t i) {
    bool was_rational = coords_[i].is_rational();
    coords_[i].bisect();
    if (!was_rational && coords_[i].is_rational()) minpolys_[i] = minpoly(i);
  }

  Poly reduce(Poly q, std::size_t m) const {
    for (std::size_t i = 0; i < m; ++i) {
      const Var v{i};
      if (q.degree(v) >= minpolys_[i].degree(v)) q = pseudo_remainder(q, minpolys_[i], v);
    }
    return q;
  }

  std::optional<int> interval_sign(const Poly& q, std::size_t m) const {
    std::vector<Interval> box;
    box.reserve(m);
    for (std::size_t i = 0; i < m; ++i) box.push_back(box_of(coords_[i]));
    Interval r = evaluate(q, box);
    if (r.lo > 0) return 1;
    if (r.hi < 0) return -1;
    if (r.lo == 0 && r.hi == 0) return 0;
    return std::nullopt;
  }

  int sign_prefix(const Poly& q_in, std::size_t m) {
    check_deadline();
    Poly q = reduce(q_in, m);
    if (q.is_constant()) return cadlab::sign(q.constant_value());
    const std::size_t used = q.max_var() + 1;
    for (int round = 0; round < 3; ++round) {
      if (auto s = interval_sign(q, used)) return *s;
      for (std::size_t i = 0; i < used; ++i) bisect(i);
      q = reduce(q, used);
      if (q.is_constant()) return cadlab::sign(q.constant_value());
    }
    if (is_zero(q, q.max_var() + 1)) return 0;
    while (true) {
      check_deadline();
      const std::size_t u = q.max_var() + 1;
      if (auto s = interval_sign(q, u)) return *s;
      for (std::size_t i = 0; i < u; ++i) bisect(i);
      q = reduce(q, u);
      if (q.is_constant()) return cadlab::sign(q.constant_value());
    }
  }

  // Drops leading coefficients (in the last variable) that vanish on the prefix.
  Poly truncate(Poly b, std::size_t m) {
    const Var t{m - 1};
    while (!b.is_zero() && b.contains(t)) {
      Poly lc = b.leading_coefficient(t);
      if (sign_prefix(lc, m - 1) != 0) break;
      b = b - lc * var_power(nvars_, t, b.degree(t));
    }
    return b;
  }

  // q uses variable m-1 and nothing beyond.
  bool is_zero(const Poly& q, std::size_t m) {
    const Var t{m - 1};
    const AlgebraicNumber& last = coords_[m - 1];
    if (m == 1) {
      UPoly g = gcd(UPoly::from_poly(q), last.poly());
      if (g.degree() < 1) return false;
      if (last.is_rational()) return true;
      return sign_change(g, last.lo(), last.hi());
    }
    Poly a = minpolys_[m - 1];
    Poly b = truncate(q, m);
    if (b.is_zero()) return true;
    if (!b.contains(t)) return sign_prefix(b, m - 1) == 0;
    while (true) {
      check_deadline();
      Poly r = reduce(pseudo_remainder(a, b, t), m - 1);
      if (!r.is_zero()) r = normalize(r);
      r = truncate(r, m);
      // a remainder free of t may still vanish at the prefix when the
      // defining polynomials are reducible
      if (r.is_zero() || (!r.contains(t) && sign_prefix(r, m - 1) == 0)) break;
      if (!r.contains(t)) return false;
      a = std::move(b);
      b = std::move(r);
    }
    // b(prefix, t) is the gcd of the last coordinate's defining polynomial and
    // q(prefix, t), so it has at most one root in the isolating interval.
    if (auto v = last.rational_value()) return sign_prefix(b.substitute(t, *v), m - 1) == 0;
    int s_lo = sign_prefix(b.substitute(t, last.lo()), m - 1);
    int s_hi = sign_prefix(b.substitute(t, last.hi()), m - 1);
    return s_lo * s_hi < 0;
  }

  std::vector<AlgebraicNumber> coords_;
  std::size_t nvars_;
  std::vector<Poly> minpolys_;
};

struct Compressed {
  Poly poly;                              // algebraic coordinates first, then any extra variables
  std::vector<AlgebraicNumber> algebraic; // the non-rational coordinates in order
};

// Substitutes rational coordinates and renumbers the algebraic ones to 0..M-1.
// Variable point.size() becomes M; later variables must not occur.
Compressed compress(const Poly& q, std::span<const AlgebraicNumber> point) {
  Poly p = q;
  std::vector<std::size_t> index(q.nvars(), Poly::npos);
  Compressed out;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (auto r = point[i].rational_value()) {
      p = p.substitute(Var{i}, *r);
    } else {
      index[i] = out.algebraic.size();
      out.algebraic.push_back(point[i]);
    }
  }
  // only the fiber variable (index point.size()) may follow the point
  std::size_t next = out.algebraic.size();
  if (point.size() < q.nvars()) index[point.size()] = next;
  out.poly = p.remap(index, next + 1);
  return out;
}

// Univariate polynomial (in the given variable) vanishing at every root of
// p(point, y): iterated resultants against the coordinates' defining polynomials.
Poly norm(const Poly& p, Tower& tower, std::size_t m) {
  Poly n = p;
  for (std::size_t j = m; j-- > 0;) {
    check_deadline();
    const Var v{j};
    if (!n.contains(v)) continue;
    Poly mp = tower.minpoly_of(j);
    Poly r = resultant(mp, n, v);
    if (r.is_zero()) {
      // Some conjugate of coordinate j annihilates n; divide those out.
      UPoly g = tower.coords()[j].poly();
      std::vector<std::pair<Monomial, std::vector<Poly::Term>>> groups;
      for (const auto& [mono, c] : n.terms()) {
        Monomial key = mono;
        key.set(v, 0);
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& gr) { return gr.first == key; });
        if (it == groups.end()) {
          groups.push_back({key, {}});
          it = groups.end() - 1;
        }
        it->second.emplace_back(Monomial::power(n.nvars(), v, mono.degree(v)), c);
      }
      for (auto& [key, terms] : groups) {
        Poly coeff = Poly::from_terms(n.nvars(), terms);
        g = gcd(g, UPoly::from_poly(coeff));
      }
      const AlgebraicNumber& a = tower.coords()[j];
      if (g.degree() < 1 || (a.is_rational() ? g.sign_at(*a.rational_value()) == 0 : sign_change(g, a.lo(), a.hi())))
        throw Error("degenerate algebraic sample: fiber norm vanishes");
      UPoly reduced = exact_quotient(tower.coords()[j].poly(), g);
      r = resultant(reduced.to_poly(n.nvars(), v), n, v);
      if (r.is_zero()) throw Error("degenerate algebraic sample: fiber norm vanishes");
    }
    n = normalize(r);
  }
  return n;
}

}  // namespace

int sign_at(const Poly& q, std::span<const AlgebraicNumber> point) {
  if (q.max_var() != Poly::npos && q.max_var() >= point.size())
    throw DomainError("sign_at: polynomial uses variables beyond the point");
  Compressed c = compress(q, point);
  if (c.poly.is_constant()) return sign(c.poly.constant_value());
  Tower tower(std::move(c.algebraic), c.poly.nvars());
  return tower.sign(c.poly);
}

FiberRoots roots_over(const Poly& p, std::span<const AlgebraicNumber> point) {
  const std::size_t k = point.size();
  if (p.max_var() != Poly::npos && p.max_var() > k) throw DomainError("roots_over: polynomial uses variables beyond y");
  Compressed c = compress(p, point);
  const std::size_t m = c.algebraic.size();
  const Var y{m};
  FiberRoots out;
  if (m == 0) {
    if (c.poly.is_zero()) {
      out.nullified = true;
      return out;
    }
    if (c.poly.is_constant()) return out;
    out.roots = isolate_real_roots(c.poly);
    return out;
  }
  Tower tower(c.algebraic, m + 1);
  // Drop leading coefficients in y that vanish at the point.
  Poly eff = c.poly;
  while (!eff.is_zero()) {
    Poly lc = eff.leading_coefficient(y);
    if (tower.sign(lc) != 0) break;
    eff = eff - lc * var_power(m + 1, y, eff.degree(y));
  }
  if (eff.is_zero()) {
    out.nullified = true;
    return out;
  }
  if (!eff.contains(y)) return out;
  Poly n = norm(eff, tower, m);
  RootList candidates = isolate_real_roots(n);
  for (auto& beta : candidates) {
    std::vector<AlgebraicNumber> ext = tower.coords();
    ext.push_back(beta);
    Tower extended(std::move(ext), m + 1);
    if (extended.sign(eff) == 0) out.roots.push_back(beta);
  }
  return out;
}

}  // namespace cadlab
