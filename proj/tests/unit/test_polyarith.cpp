#include <doctest.h>

#include <algorithm>

#include "builders.hpp"
#include "cadlab/error.hpp"
#include "cadlab/polyarith.hpp"
#include "random_polys.hpp"
#include "sylvester.hpp"

using namespace cadlab;
using namespace testsupport;

TEST_SUITE("polyarith") {

TEST_CASE("rational literals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("12.375") == Rational(99, 8));
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(integer_below(Rational(3)) == 2);
  CHECK(integer_above(Rational(-1, 2)) == 0);
  CHECK(simplest_between(Rational(1, 3), Rational(2, 3)) == Rational(1, 2));
  CHECK(simplest_between(Rational(-5, 2), Rational(7, 3)) == Rational(0));
}

TEST_CASE("terms stay canonical") {
  XY v;
  const Poly p = v.x * v.y + v.y * v.x - v.c(2) * v.x * v.y;
  CHECK(p.is_zero());
  const Poly q = v.y * v.y + v.x * v.x * v.x - v.c(1);
  CHECK(q.term_count() == 3);
  CHECK(q.leading_term().first == Monomial(std::vector<std::uint32_t>{3, 0}));
  CHECK(q.total_degree() == 3);
  CHECK(q.degree(Var{1}) == 2);
  CHECK(q.constant_term() == -1);
  CHECK(q.to_string() == "x0^3 + x1^2 - 1");
}

TEST_CASE("evaluation, substitution and coefficients") {
  XY v;
  const Poly p = v.x * v.y * v.y + v.x - v.y * v.y - v.c(2);
  const std::vector<Rational> pt{Rational(3), Rational(1, 2)};
  CHECK(p.evaluate(pt) == Rational(3, 4) + 3 - Rational(1, 4) - 2);
  CHECK(p.substitute(Var{0}, 1) == -v.c(1));
  const auto cs = p.coefficients(Var{1});
  REQUIRE(cs.size() == 3);
  CHECK(cs[2] == v.x - v.c(1));
  CHECK(cs[1].is_zero());
  CHECK(Poly::from_coefficients(2, cs, Var{1}) == p);
  CHECK(p.derivative(Var{1}) == v.c(2) * v.x * v.y - v.c(2) * v.y);
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Poly p = random_poly(rng, 3, 3, 4, 5), q = random_poly(rng, 3, 3, 4, 5), r = random_poly(rng, 3, 3, 4, 5);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p - p == Poly(3));
    CHECK(arith(p, q, ArithKind::sub) == p + arith(q, q, ArithKind::neg));
  }
}

TEST_CASE("resultant examples") {
  XY v;
  const Var y{1};
  const Poly circle = v.x * v.x + v.y * v.y - v.c(1);
  const Poly shifted = (v.x - v.c(1)) * (v.x - v.c(1)) + v.y * v.y - v.c(1);
  // y is eliminated: (2x - 1)^2
  CHECK(normalize(resultant(circle, shifted, y)) == normalize((v.c(2) * v.x - v.c(1)).pow(2)));
  CHECK(normalize(discriminant(circle, y)) == normalize(v.x * v.x - v.c(1)));
  CHECK_THROWS_AS(resultant(v.x, circle, y), DomainError);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  Rng rng(5);
  int compared = 0;
  for (int i = 0; i < 150; ++i) {
    const Poly a = random_poly(rng, 2, 4, 4, 6), b = random_poly(rng, 2, 4, 4, 6);
    const Var v{static_cast<std::size_t>(i % 2)};
    if (!a.contains(v) || !b.contains(v)) continue;
    ++compared;
    CHECK(resultant(a, b, v) == oracle::sylvester_resultant(a, b, v));
  }
  CHECK(compared > 50);
}

TEST_CASE("resultant symmetry and vanishing") {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(rng, 2, 3, 3, 4), b = random_poly(rng, 2, 3, 3, 4);
    const Var v{1};
    if (!a.contains(v) || !b.contains(v)) continue;
    if (i % 3 == 0) {
      const Poly common = random_poly(rng, 2, 1, 2, 3) + var(2, 1);
      a *= common;
      b *= common;
    }
    const unsigned m = a.degree(v), n = b.degree(v);
    const Poly ab = resultant(a, b, v), ba = resultant(b, a, v);
    CHECK(ab == ((m * n) % 2 == 0 ? ba : -ba));
    const bool shared = gcd(a, b).contains(v);
    CHECK(ab.is_zero() == shared);
  }
}

TEST_CASE("gcd, content and square-free parts") {
  XY v;
  const Poly f = (v.x - v.c(1)) * (v.y + v.x);
  const Poly g = (v.x - v.c(1)) * (v.y - v.c(2));
  CHECK(gcd(f, g) == normalize(v.x - v.c(1)));
  CHECK(content(f, Var{1}) == normalize(v.x - v.c(1)));
  CHECK(primitive_part(f, Var{1}) == normalize(v.y + v.x));
  const Poly sq = (v.y - v.x).pow(3) * (v.y + v.c(1));
  CHECK(normalize(squarefree_part(sq, Var{1})) == normalize((v.y - v.x) * (v.y + v.c(1))));
  CHECK(normalize(squarefree_part((v.x * v.y).pow(2))) == normalize(v.x * v.y));
  CHECK(exact_quotient(f, v.x - v.c(1)) == v.y + v.x);
  CHECK_THROWS_AS(exact_quotient(f, v.y + v.c(7)), DomainError);
  CHECK(normalize(v.c(Rational(-3, 2)) * v.x + v.c(3)) == v.x - v.c(2));
}

TEST_CASE("pseudo-remainder") {
  XY v;
  const Poly a = v.y * v.y * v.x + v.c(1), b = v.c(2) * v.y + v.x;
  const Poly r = pseudo_remainder(a, b, Var{1});
  CHECK_FALSE(r.contains(Var{1}));
  // lc(b)^2 * a = q * b + r for some q
  CHECK(exact_quotient(v.c(4) * a - r, b).degree(Var{1}) == 1);
}

TEST_CASE("square-free basis is pairwise coprime and square-free") {
  Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    std::vector<Poly> a;
    for (int j = 0; j < 3; ++j) a.push_back(random_poly(rng, 2, 2, 3, 3));
    a.push_back(a[0] * a[1]);
    a.push_back(a[2].pow(2));
    const Var v{1};
    const auto sb = squarefree_primitive_basis(a, v);
    for (std::size_t p = 0; p < sb.basis.size(); ++p) {
      CHECK(sb.basis[p].contains(v));
      CHECK(content(sb.basis[p], v).is_constant());
      if (sb.basis[p].degree(v) >= 2) CHECK_FALSE(discriminant(sb.basis[p], v).is_zero());
      for (std::size_t q = p + 1; q < sb.basis.size(); ++q) CHECK_FALSE(gcd(sb.basis[p], sb.basis[q]).contains(v));
    }
  }
}

TEST_CASE("degree statistics") {
  XY v;
  const std::vector<Poly> a{v.x * v.y * v.y + v.x - v.y * v.y - v.c(2)};
  const auto st = degree_stats(a, 2);
  CHECK(st[0] == DegreeStats{1, 3, 2});
  CHECK(st[1] == DegreeStats{2, 3, 2});
  const std::vector<Poly> b{v.x * v.x * v.y + v.x};
  CHECK(degree_stats(b, 2)[0] == DegreeStats{2, 3, 2});
  CHECK(degree_stats(b, 2)[1] == DegreeStats{1, 3, 1});
}

TEST_CASE("degree statistics ignore order and scaling") {
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    std::vector<Poly> a;
    for (int j = 0; j < 4; ++j) a.push_back(random_poly(rng, 3, 4, 4, 5));
    const auto base = degree_stats(a, 3);
    auto b = a;
    std::shuffle(b.begin(), b.end(), rng);
    b[0] = b[0] * Rational(-7, 3);
    CHECK(degree_stats(b, 3) == base);
  }
}

TEST_CASE("insert_normalized deduplicates rational multiples") {
  XY v;
  std::vector<Poly> set;
  insert_normalized(set, v.x * v.x - v.c(1));
  insert_normalized(set, v.c(-3) * v.x * v.x + v.c(3));
  insert_normalized(set, v.c(5));
  insert_normalized(set, (v.x - v.c(2)).pow(2));
  REQUIRE(set.size() == 2);
  CHECK(set[1] == v.x - v.c(2));
}

}  // TEST_SUITE
