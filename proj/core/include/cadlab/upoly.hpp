#pragma once

#include <string>
#include <vector>

#include "cadlab/poly.hpp"
#include "cadlab/rational.hpp"

namespace cadlab {

/// Dense univariate polynomial with integer coefficients, coeffs()[i] the
/// coefficient of t^i. Produced primitive with positive leading coefficient by
/// the factory functions; the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> coeffs);

  /// Clears denominators and content; sign made positive.
  static UPoly from_rationals(const std::vector<Rational>& coeffs);
  /// Accepts a Poly with at most one occurring variable. Throws DomainError otherwise.
  static UPoly from_poly(const Poly& p);
  /// den*t - num.
  static UPoly linear_root(const Rational& q);

  Poly to_poly(std::size_t nvars, Var v) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& leading() const { return c_.back(); }

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;
  UPoly derivative() const;
  /// p(-t)
  UPoly reflect() const;

  friend bool operator==(const UPoly&, const UPoly&) = default;
  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<Integer> c_;
};

UPoly primitive(const UPoly& p);
UPoly operator*(const UPoly& a, const UPoly& b);
/// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Primitive quotient a / b, b | a over Q. Throws DomainError when inexact.
UPoly exact_quotient(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

/// Sign change of p between lo and hi (both non-roots): p(lo)*p(hi) < 0.
bool sign_change(const UPoly& p, const Rational& lo, const Rational& hi);

}  // namespace cadlab
