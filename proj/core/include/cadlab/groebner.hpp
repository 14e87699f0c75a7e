#pragma once

#include <compare>
#include <span>
#include <vector>

#include "cadlab/poly.hpp"

namespace cadlab {

/// Lex or graded-lex order over an explicit variable priority, most
/// significant first. An empty priority means declared order (variable 0 highest).
struct MonomialOrder {
  enum class Kind { lex, grlex };
  Kind kind = Kind::lex;
  std::vector<Var> priority;

  static MonomialOrder lex(std::vector<Var> priority = {}) { return {Kind::lex, std::move(priority)}; }
  static MonomialOrder grlex(std::vector<Var> priority = {}) { return {Kind::grlex, std::move(priority)}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
};

Monomial leading_monomial(const Poly& p, const MonomialOrder& ord);
Rational leading_coefficient(const Poly& p, const MonomialOrder& ord);

/// Remainder of full multivariate division of p by G.
Poly normal_form(const Poly& p, std::span<const Poly> g, const MonomialOrder& ord);

/// Reduced Groebner basis: monic elements sorted by decreasing leading
/// monomial. {1} for an inconsistent system, {} when every input is zero.
std::vector<Poly> buchberger(std::span<const Poly> e, const MonomialOrder& ord);

}  // namespace cadlab
