#pragma once

#include <span>
#include <vector>

#include "cadlab/poly.hpp"

namespace cadlab {

// Elimination-theory kernels over Q[x_1..x_n]. Every function is pure.

/// Pseudo-remainder of a by b w.r.t. v: lc_v(b)^(deg a - deg b + 1) * a mod b.
Poly pseudo_remainder(const Poly& a, const Poly& b, Var v);

/// a / b where b divides a exactly; throws DomainError otherwise.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Resultant w.r.t. v by the subresultant PRS. Matches the Sylvester
/// determinant convention: res(a, b) = lc(a)^deg(b) * prod b(roots of a).
/// Throws DomainError("not a polynomial in v") when either input has v-degree 0.
Poly resultant(const Poly& a, const Poly& b, Var v);

/// (-1)^(d(d-1)/2) * res_v(p, dp/dv) / lc_v(p), d = deg_v(p) >= 2.
Poly discriminant(const Poly& p, Var v);

/// Integer coefficients with unit content and positive leading coefficient
/// (graded-lex). Identifies polynomials equal up to a nonzero rational factor.
Poly normalize(const Poly& p);

/// Normalized gcd over Q[x_1..x_n]; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Normalized gcd of the coefficients of p w.r.t. v.
Poly content(const Poly& p, Var v);
Poly primitive_part(const Poly& p, Var v);

/// p / gcd(p, dp/dv): removes repeated factors of positive degree in v.
Poly squarefree_part(const Poly& p, Var v);
/// Removes every repeated factor: p / gcd(p, all partial derivatives).
Poly squarefree_part(const Poly& p);

struct SquarefreeBasis {
  std::vector<Poly> basis;     ///< pairwise coprime, square-free, primitive, positive v-degree
  std::vector<Poly> contents;  ///< nonconstant contents and v-free inputs, passed one level down
};

/// Square-free, pairwise coprime basis (w.r.t. v) of the nonconstant members of a.
SquarefreeBasis squarefree_primitive_basis(std::span<const Poly> a, Var v);

struct DegreeStats {
  std::uint32_t overall_degree = 0;
  std::uint32_t max_term_total_degree = 0;
  std::size_t term_count = 0;
  friend bool operator==(const DegreeStats&, const DegreeStats&) = default;
};

/// Per declared variable: (max degree, max total degree of a term containing
/// it, number of terms containing it).
std::vector<DegreeStats> degree_stats(std::span<const Poly> a, std::size_t nvars);

/// Adds normalize(squarefree_part(p)) to set unless p is constant or already present.
void insert_normalized(std::vector<Poly>& set, const Poly& p);

}  // namespace cadlab
