#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cadlab/poly.hpp"
#include "cadlab/upoly.hpp"

namespace cadlab {

/// A real algebraic number: the unique root of a square-free integer
/// polynomial inside the open interval (lo, hi). Neither endpoint is a root.
/// A rational q is encoded by the linear polynomial den*t - num, which keeps
/// comparisons and sign tests exact without refinement.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
  /// Degenerate encoding: t - q on (q - 1, q + 1).
  explicit AlgebraicNumber(const Rational& q);
  /// Caller guarantees exactly one root of `poly` in (lo, hi) and none at the ends.
  AlgebraicNumber(UPoly poly, Rational lo, Rational hi);

  const UPoly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool is_rational() const { return poly_.degree() == 1; }
  /// Exact value for rational numbers.
  std::optional<Rational> rational_value() const;
  /// Interval lower/upper bound, or the exact value for rationals.
  Rational lower_bound() const;
  Rational upper_bound() const;

  /// One bisection step (becomes rational if the midpoint is the root).
  void bisect();
  double approx() const;
  std::string to_string(const std::string& var = "t") const;

 private:
  UPoly poly_;
  Rational lo_, hi_;
};

using RootList = std::vector<AlgebraicNumber>;

/// Distinct real roots of a nonzero univariate polynomial, increasing.
/// Descartes'-rule bisection on the square-free part.
/// Throws DomainError("identically zero") for the zero polynomial.
RootList isolate_real_roots(const UPoly& p);
/// Accepts a Poly with at most one occurring variable.
RootList isolate_real_roots(const Poly& p);

/// Same number with interval width <= width.
AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width);

/// Exact comparison (gcd of defining polynomials plus interval overlap).
std::strong_ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Refines copies of a < b until a's upper bound <= b's lower bound.
void separate(AlgebraicNumber& a, AlgebraicNumber& b);

/// Cardinality of the union of real roots. All members must be univariate in
/// the same variable (constants allowed); throws DomainError otherwise.
std::size_t count_distinct_real_roots(std::span<const Poly> polys);

// ---- Evaluation at algebraic points (used by lifting) ----

/// Sign of q at the point whose i-th coordinate is point[i] (variable i).
/// Variables at or beyond point.size() must not occur in q. Exact.
int sign_at(const Poly& q, std::span<const AlgebraicNumber> point);

struct FiberRoots {
  bool nullified = false;  ///< p(point, y) is identically zero
  RootList roots;          ///< distinct real roots of p(point, y), increasing
};

/// Real roots in variable y = point.size() of p(point, y).
FiberRoots roots_over(const Poly& p, std::span<const AlgebraicNumber> point);

}  // namespace cadlab
