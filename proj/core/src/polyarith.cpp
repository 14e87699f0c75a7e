#include "cadlab/polyarith.hpp"

#include <algorithm>

#include "cadlab/deadline.hpp"
#include "cadlab/error.hpp"

namespace cadlab {
namespace {

Poly var_power(std::size_t nvars, Var v, std::uint32_t e) {
  return Poly::monomial(Monomial::power(nvars, v, e), Rational(1));
}

bool positive_degree(const Poly& p, Var v) { return p.contains(v); }

}  // namespace

Poly pseudo_remainder(const Poly& a, const Poly& b, Var v) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  const auto nv = a.nvars();
  const auto db = b.degree(v);
  if (db == 0) return Poly(nv);
  const Poly lcb = b.leading_coefficient(v);
  Poly r = a;
  auto da = a.degree(v);
  int k = da >= db ? static_cast<int>(da - db + 1) : 0;
  while (!r.is_zero() && r.degree(v) >= db) {
    check_deadline();
    auto dr = r.degree(v);
    Poly lr = r.leading_coefficient(v);
    r = lcb * r - lr * var_power(nv, v, dr - db) * b;
    --k;
  }
  if (k > 0) r = r * lcb.pow(static_cast<unsigned>(k));
  return r;
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  const auto nv = a.nvars();
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  const Var v{b.max_var()};
  const auto db = b.degree(v);
  const Poly lb = b.leading_coefficient(v);
  Poly q(nv), r = a;
  while (!r.is_zero()) {
    auto dr = r.degree(v);
    if (dr < db) throw DomainError("inexact polynomial division");
    Poly c = exact_quotient(r.leading_coefficient(v), lb);
    Poly t = c * var_power(nv, v, dr - db);
    q += t;
    r -= t * b;
  }
  return q;
}

Poly resultant(const Poly& a_in, const Poly& b_in, Var v) {
  if (!positive_degree(a_in, v) || !positive_degree(b_in, v)) throw DomainError("not a polynomial in v");
  const auto nv = a_in.nvars();
  Poly a = a_in, b = b_in;
  int s = 1;
  if (a.degree(v) < b.degree(v)) {
    std::swap(a, b);
    if ((a.degree(v) % 2 == 1) && (b.degree(v) % 2 == 1)) s = -1;
  }
  Poly g = Poly::constant(nv, 1), h = Poly::constant(nv, 1);
  while (true) {
    check_deadline();
    const auto da = a.degree(v), db = b.degree(v);
    const auto delta = da - db;
    if ((da % 2 == 1) && (db % 2 == 1)) s = -s;
    Poly r = pseudo_remainder(a, b, v);
    a = b;
    if (r.is_zero()) return Poly(nv);
    b = exact_quotient(r, g * h.pow(delta));
    g = a.leading_coefficient(v);
    if (delta == 0) {
      // h unchanged
    } else {
      h = exact_quotient(g.pow(delta), h.pow(delta - 1));
    }
    if (b.degree(v) == 0) break;
  }
  const auto da = a.degree(v);
  h = exact_quotient(b.pow(da), h.pow(da - 1));
  return s < 0 ? -h : h;
}

Poly discriminant(const Poly& p, Var v) {
  const auto d = p.degree(v);
  if (d < 2) throw DomainError("discriminant needs degree >= 2 in v");
  Poly r = exact_quotient(resultant(p, p.derivative(v), v), p.leading_coefficient(v));
  return ((d * (d - 1) / 2) % 2 == 1) ? -r : r;
}

Poly normalize(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& t : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& t : p.terms()) {
    Integer n = t.second.get_num() * (den_lcm / t.second.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (p.leading_coefficient() < 0) factor = -factor;
  return p * factor;
}

Poly content(const Poly& p, Var v) {
  if (p.is_zero()) return p;
  Poly g(p.nvars());
  for (const auto& c : p.coefficients(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly::constant(p.nvars(), 1);
  }
  return g;
}

Poly primitive_part(const Poly& p, Var v) {
  if (p.is_zero()) return p;
  return normalize(exact_quotient(p, content(p, v)));
}

Poly gcd(const Poly& a, const Poly& b) {
  check_deadline();
  const auto nv = a.nvars();
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(nv, 1);
  const Var v{std::max(a.max_var() == Poly::npos ? 0 : a.max_var(), b.max_var() == Poly::npos ? 0 : b.max_var())};
  if (!a.contains(v)) return gcd(a, content(b, v));
  if (!b.contains(v)) return gcd(content(a, v), b);
  Poly ca = content(a, v), cb = content(b, v);
  Poly c = gcd(ca, cb);
  Poly pa = exact_quotient(a, ca), pb = exact_quotient(b, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  Poly g(nv);
  while (true) {
    Poly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = primitive_part(pb, v);
      break;
    }
    if (r.degree(v) == 0) {
      g = Poly::constant(nv, 1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  return normalize(c * g);
}

Poly squarefree_part(const Poly& p, Var v) {
  if (p.degree(v) < 1) return p;
  Poly g = gcd(p, p.derivative(v));
  return normalize(exact_quotient(p, g));
}

Poly squarefree_part(const Poly& p) {
  if (p.is_constant()) return p;
  Poly g = p;
  for (Var v : p.variables()) {
    g = gcd(g, p.derivative(v));
    if (g.is_constant()) return normalize(p);
  }
  return normalize(exact_quotient(p, g));
}

void insert_normalized(std::vector<Poly>& set, const Poly& p) {
  if (p.is_constant()) return;
  Poly q = squarefree_part(p);
  if (std::find(set.begin(), set.end(), q) == set.end()) set.push_back(std::move(q));
}

SquarefreeBasis squarefree_primitive_basis(std::span<const Poly> a, Var v) {
  SquarefreeBasis out;
  std::vector<Poly> parts;
  for (const auto& p : a) {
    if (p.is_constant()) continue;
    if (!p.contains(v)) {
      insert_normalized(out.contents, p);
      continue;
    }
    Poly c = content(p, v);
    insert_normalized(out.contents, c);
    Poly s = squarefree_part(primitive_part(p, v), v);
    if (std::find(parts.begin(), parts.end(), s) == parts.end()) parts.push_back(std::move(s));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < parts.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < parts.size() && !changed; ++j) {
        Poly g = gcd(parts[i], parts[j]);
        if (!g.contains(v)) continue;
        Poly fi = normalize(exact_quotient(parts[i], g));
        Poly fj = normalize(exact_quotient(parts[j], g));
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(j));
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
        for (Poly* f : {&g, &fi, &fj})
          if (f->contains(v) && std::find(parts.begin(), parts.end(), *f) == parts.end()) parts.push_back(*f);
        changed = true;
      }
  }
  out.basis = std::move(parts);
  return out;
}

std::vector<DegreeStats> degree_stats(std::span<const Poly> a, std::size_t nvars) {
  std::vector<DegreeStats> stats(nvars);
  for (const auto& p : a)
    for (const auto& [m, c] : p.terms())
      for (std::size_t i = 0; i < nvars; ++i) {
        if (m[i] == 0) continue;
        auto& s = stats[i];
        s.overall_degree = std::max(s.overall_degree, m[i]);
        s.max_term_total_degree = std::max(s.max_term_total_degree, m.total_degree());
        ++s.term_count;
      }
  return stats;
}

}  // namespace cadlab
