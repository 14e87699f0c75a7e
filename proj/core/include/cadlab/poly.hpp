#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cadlab/rational.hpp"

namespace cadlab {

/// Index into a problem's declared variable sequence.
struct Var {
  std::size_t id = 0;
  friend auto operator<=>(Var, Var) = default;
};

/// Exponent vector, one entry per declared variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial power(std::size_t nvars, Var v, std::uint32_t e) {
    Monomial m(nvars);
    m.exps_[v.id] = e;
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t degree(Var v) const { return exps_[v.id]; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  void set(Var v, std::uint32_t e) { exps_[v.id] = e; }

  std::uint32_t total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded order, ties broken lexicographically with variable 0 most significant.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in descending graded-lexicographic order with no zero
/// coefficients; the zero polynomial has no terms. Values are immutable once
/// built, so sharing across threads is safe.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, Var v);
  static Poly monomial(const Monomial& m, const Rational& c);
  /// Sums duplicate monomials and drops zero coefficients.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);
  /// Inverse of coefficients(): sum of coeffs[i] * v^i.
  static Poly from_coefficients(std::size_t nvars, std::span<const Poly> coeffs, Var v);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value (0 when absent).
  Rational constant_term() const;
  /// Requires is_constant().
  Rational constant_value() const { return is_zero() ? Rational(0) : terms_.front().second; }

  /// Leading term in graded-lex order. Requires !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().second; }

  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;
  bool contains(Var v) const;
  std::vector<Var> variables() const;
  /// Highest-indexed variable present, or nullopt-like npos for constants.
  std::size_t max_var() const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Coefficients w.r.t. v, indexed by power of v (size degree(v)+1, or 0 for zero).
  std::vector<Poly> coefficients(Var v) const;
  Poly coefficient(Var v, std::uint32_t power) const;
  /// Coefficient of the highest power of v.
  Poly leading_coefficient(Var v) const;

  Poly derivative(Var v) const;
  Poly substitute(Var v, const Rational& value) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Moves variable i to index new_index[i] in a space of new_nvars variables.
  /// Variables mapped to npos must not occur.
  Poly remap(std::span<const std::size_t> new_index, std::size_t new_nvars) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  std::string to_string(std::span<const std::string> names) const;
  /// Uses x0, x1, ... as names.
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Deterministic total order on polynomials (term by term), for sorting sets.
bool poly_less(const Poly& a, const Poly& b);

enum class ArithKind { add, sub, mul, neg };
/// Single entry point mirroring the ring operations; `q` is ignored for neg.
Poly arith(const Poly& p, const Poly& q, ArithKind kind);

}  // namespace cadlab
