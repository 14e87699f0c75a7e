#include <doctest.h>

#include <algorithm>

#include "builders.hpp"
#include "cadlab/error.hpp"
#include "cadlab/polyarith.hpp"
#include "cadlab/projection.hpp"
#include "random_polys.hpp"

using namespace cadlab;
using namespace testsupport;

namespace {

bool same_set(std::vector<Poly> a, std::vector<Poly> b) {
  for (auto& p : a) p = normalize(p);
  for (auto& p : b) p = normalize(p);
  std::sort(a.begin(), a.end(), poly_less);
  std::sort(b.begin(), b.end(), poly_less);
  return a == b;
}

bool contains(const std::vector<Poly>& set, const Poly& p) {
  return std::find(set.begin(), set.end(), normalize(p)) != set.end();
}

}  // namespace

TEST_SUITE("projection") {

TEST_CASE("circle") {
  XY v;
  const std::vector<Poly> a{v.x * v.x + v.y * v.y - v.c(1)};
  CHECK(same_set(mccallum_project(a, Var{1}), {v.x * v.x - v.c(1)}));
  const auto levels = projection_levels(a, VarOrdering({Var{0}, Var{1}}));
  REQUIRE(levels.size() == 2);
  CHECK(same_set(levels.level(2), a));
  CHECK(same_set(levels.level(1), {v.x * v.x - v.c(1)}));
  CHECK(levels.polynomial_count() == 2);
}

TEST_CASE("two circles") {
  XY v;
  const Poly f1 = v.x * v.x + v.y * v.y - v.c(1), f2 = v.x * v.x - v.c(2) * v.x + v.y * v.y;
  const std::vector<Poly> a{f1, f2};
  CHECK(same_set(mccallum_project(a, Var{1}),
                 {v.x * v.x - v.c(1), v.x * v.x - v.c(2) * v.x, v.c(2) * v.x - v.c(1)}));
  CHECK(same_set(reduced_ec_project(a, f1, Var{1}), {v.x * v.x - v.c(1), v.c(2) * v.x - v.c(1)}));
  CHECK(same_set(reduced_ec_project(a, f2 * Rational(-3), Var{1}),
                 {v.x * v.x - v.c(2) * v.x, v.c(2) * v.x - v.c(1)}));
  const std::vector<Poly> single{f1};
  CHECK(same_set(reduced_ec_project(single, f1, Var{1}), mccallum_project(single, Var{1})));
  CHECK_THROWS_AS(reduced_ec_project(single, f2, Var{1}), DomainError);
}

TEST_CASE("blow-up polynomial projected in x") {
  XY v;
  const std::vector<Poly> a{v.x * v.y * v.y + v.x - v.y * v.y - v.c(2)};
  // coefficients y^2 + 1 and -(y^2 + 2); neither has real roots
  CHECK(same_set(mccallum_project(a, Var{0}), {v.y * v.y + v.c(1), v.y * v.y + v.c(2)}));
}

TEST_CASE("constant coefficients stop the coefficient list") {
  XY v;
  const std::vector<Poly> a{v.y * v.y + v.c(1)};
  CHECK(mccallum_project(a, Var{1}).empty());
  const std::vector<Poly> b{v.y * v.y + v.x * v.y + v.x};
  CHECK(same_set(mccallum_project(b, Var{1}), {v.x * v.x - v.c(4) * v.x}));
}

TEST_CASE("inputs free of the variable pass through") {
  XY v;
  const Poly e = v.y * v.y - v.x, g = v.x + v.c(3);
  const std::vector<Poly> a{e, g};
  const auto out = reduced_ec_project(a, e, Var{1});
  CHECK(same_set(out, {v.x, g}));
  CHECK(same_set(mccallum_project(a, Var{1}), {v.x, g}));
  const std::vector<Poly> constants{v.c(3), v.c(-1)};
  CHECK(mccallum_project(constants, Var{1}).empty());
}

TEST_CASE("designations change only the designated step") {
  XY v;
  const Poly f1 = v.x * v.x + v.y * v.y - v.c(1), f2 = v.x * v.x - v.c(2) * v.x + v.y * v.y;
  const std::vector<Poly> a{f1, f2};
  const VarOrdering ord({Var{0}, Var{1}});
  ECDesignation none;
  none.by_level.resize(2);
  CHECK(none.empty());
  CHECK(none.to_string() == "none");
  CHECK(projection_levels(a, ord, &none).levels == projection_levels(a, ord).levels);
  ECDesignation d = none;
  d.by_level[1] = f1;
  d.labels = {"", "f1"};
  CHECK(d.at_level(2) != nullptr);
  CHECK(d.at_level(1) == nullptr);
  const auto levels = projection_levels(a, ord, &d);
  CHECK(same_set(levels.level(1), {v.x * v.x - v.c(1), v.c(2) * v.x - v.c(1)}));
  ECDesignation wrong = none;
  wrong.by_level[1] = v.x - v.c(1);
  CHECK_THROWS_AS(projection_levels(a, ord, &wrong), DomainError);
}

TEST_CASE("ordered space round trip") {
  XYZ v;
  const Poly p = v.x * v.y * v.y + v.z - v.c(7) * v.x * v.z * v.z;
  const VarOrdering ord({Var{2}, Var{0}, Var{1}});
  const Poly q = to_ordered_space(p, ord);
  CHECK(q.degree(Var{0}) == 2);  // z sits at level 1
  CHECK(q.degree(Var{2}) == 2);  // y sits at level 3
  CHECK(from_ordered_space(q, ord) == p);
  CHECK(main_level(p, ord) == 3);
  CHECK(main_level(v.x + v.z, ord) == 2);
  CHECK(main_level(v.c(4), ord) == 0);
}

TEST_CASE("levels only use variables not yet projected") {
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    std::vector<Poly> a;
    for (int j = 0; j < 3; ++j) a.push_back(random_poly(rng, 3, 2, 3, 3));
    std::vector<Var> vars{Var{0}, Var{1}, Var{2}};
    std::shuffle(vars.begin(), vars.end(), rng);
    const VarOrdering ord(vars);
    const auto levels = projection_levels(a, ord);
    for (std::size_t k = 1; k <= 3; ++k)
      for (const auto& p : levels.level(k)) {
        CHECK(main_level(p, ord) == k);
        CHECK(normalize(p) == p);
      }
  }
}

TEST_CASE("reduced projection is contained in the full one") {
  Rng rng(47);
  for (int i = 0; i < 60; ++i) {
    std::vector<Poly> a;
    for (int j = 0; j < 3; ++j) a.push_back(random_poly(rng, 2, 3, 3, 4));
    const Var v{1};
    const Poly& e = a[0];
    if (!e.contains(v)) continue;
    const auto full = mccallum_project(a, v);
    for (const auto& p : reduced_ec_project(a, e, v)) CHECK(contains(full, p));
  }
}

}  // TEST_SUITE
