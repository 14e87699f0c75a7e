#include <doctest.h>

#include <filesystem>

#include "builders.hpp"
#include "cadlab/heuristics.hpp"
#include "cadlab/ordering.hpp"
#include "cadlab/problem.hpp"
#include "cadlab/projection.hpp"
#include "random_polys.hpp"

using namespace cadlab;
using namespace testsupport;

namespace {

const VarOrdering kXY({Var{0}, Var{1}});
const VarOrdering kYX({Var{1}, Var{0}});

std::vector<Poly> blowup() {
  XY v;
  return {v.x * v.y * v.y + v.x - v.y * v.y - v.c(2)};
}

std::vector<Poly> circle() {
  XY v;
  return {v.x * v.x + v.y * v.y - v.c(1)};
}

std::vector<Poly> two_circles() {
  XY v;
  return {v.x * v.x + v.y * v.y - v.c(1), v.x * v.x - v.c(2) * v.x + v.y * v.y};
}

}  // namespace

TEST_SUITE("heuristics") {

TEST_CASE("orderings and blocks") {
  CHECK(admissible_orderings(3, {}).size() == 6);
  const std::vector<QuantifierBlock> blocks{{Quantifier::exists, {Var{2}}}};
  const auto ords = admissible_orderings(3, blocks);
  REQUIRE(ords.size() == 2);
  for (const auto& o : ords) {
    CHECK(o.level_var(3) == Var{2});
    CHECK(respects_blocks(o, 3, blocks));
  }
  CHECK_FALSE(respects_blocks(VarOrdering({Var{2}, Var{0}, Var{1}}), 3, blocks));
  CHECK(ords.front() < ords.back());
  const std::vector<std::string> names{"x", "y", "z"};
  CHECK(parse_ordering("y,x,z", names) == VarOrdering({Var{1}, Var{0}, Var{2}}));
  CHECK(VarOrdering({Var{1}, Var{0}, Var{2}}).to_string(names) == "y,x,z");
  CHECK(VarOrdering({Var{1}, Var{0}, Var{2}}).projection_sequence() == std::vector<Var>{Var{2}, Var{0}, Var{1}});
  CHECK_THROWS(parse_ordering("x,x,z", names));
  CHECK_THROWS(parse_ordering("x,y", names));
  CHECK_THROWS(admissible_orderings(kMaxEnumeratedVariables + 1, {}));
}

TEST_CASE("Brown") {
  auto r = brown_order(blowup(), 2, {});
  CHECK(r.chosen == kYX);
  r = brown_order(circle(), 2, {});
  CHECK(r.chosen == kXY);
  CHECK(r.tied == 2);
  XY v;
  const std::vector<Poly> a{v.x * v.x * v.y + v.x};
  CHECK(brown_order(a, 2, {}).chosen == kXY);
}

TEST_CASE("sotd") {
  const auto levels = projection_levels(circle(), kXY);
  CHECK(sotd_value(levels) == 6);
  CHECK(sotd_value(ProjectionLevels{}) == 0);
  const auto tc = projection_levels(two_circles(), kXY);
  CHECK(sotd_value(tc) == sotd_value(projection_levels(two_circles(), kXY)));
  CHECK(sotd_value(projection_levels(blowup(), kYX)) < sotd_value(projection_levels(blowup(), kXY)));
  CHECK(order_by_sotd(blowup(), 2, {}, SotdStrategy::exhaustive).chosen == kYX);
  CHECK(order_by_sotd(blowup(), 2, {}, SotdStrategy::greedy).chosen == kYX);
  const std::vector<Poly> uni{var(1, 0) * var(1, 0) - cst(1, 2)};
  CHECK(order_by_sotd(uni, 1, {}, SotdStrategy::exhaustive).chosen == VarOrdering::identity(1));
  CHECK(order_by_sotd(uni, 1, {}, SotdStrategy::greedy).chosen == VarOrdering::identity(1));
}

TEST_CASE("ndrr") {
  CHECK(ndrr_value(projection_levels(blowup(), kYX)) == 0);
  CHECK(ndrr_value(projection_levels(blowup(), kXY)) == 2);
  CHECK(order_by_ndrr(blowup(), 2, {}).chosen == kYX);
  const auto r = order_by_ndrr(circle(), 2, {});
  CHECK(r.chosen == kXY);
  CHECK(r.tied == 2);
  XY v;
  const std::vector<Poly> constants{v.c(4)};
  CHECK(order_by_ndrr(constants, 2, {}).chosen == kXY);
}

TEST_CASE("full-dimensional cells") {
  CHECK(order_by_fulldim(blowup(), 2, {}).chosen == kYX);
  const auto r = order_by_fulldim(circle(), 2, {});
  CHECK(r.chosen == kXY);
  CHECK(r.tied == 2);
  REQUIRE(r.candidates.size() == 2);
  CHECK(r.candidates[0].score == std::vector<std::int64_t>{5});
}

TEST_CASE("reports are consistent") {
  for (const auto& a : {blowup(), circle(), two_circles()}) {
    for (const auto& r : {order_by_sotd(a, 2, {}, SotdStrategy::exhaustive), order_by_ndrr(a, 2, {}),
                          order_by_fulldim(a, 2, {})}) {
      std::vector<std::int64_t> best = r.candidates.front().score;
      for (const auto& c : r.candidates) best = std::min(best, c.score);
      std::size_t ties = 0;
      for (const auto& c : r.candidates)
        if (c.score == best) {
          if (ties++ == 0) CHECK(*c.ordering == r.chosen);
        }
      CHECK(ties == r.tied);
    }
  }
}

TEST_CASE("heuristics respect quantifier blocks") {
  Rng rng(13);
  const std::vector<QuantifierBlock> blocks{{Quantifier::forall, {Var{0}}}};
  for (int i = 0; i < 10; ++i) {
    std::vector<Poly> a{random_poly(rng, 3, 2, 3, 3), random_poly(rng, 3, 2, 3, 3)};
    for (const auto& r : {brown_order(a, 3, blocks), order_by_sotd(a, 3, blocks, SotdStrategy::exhaustive),
                          order_by_sotd(a, 3, blocks, SotdStrategy::greedy), order_by_ndrr(a, 3, blocks)}) {
      CHECK(r.chosen.size() == 3);
      CHECK(respects_blocks(r.chosen, 3, blocks));
    }
  }
}

TEST_CASE("choices are invariant under scaling") {
  Rng rng(23);
  for (int i = 0; i < 15; ++i) {
    std::vector<Poly> a{random_poly(rng, 2, 3, 3, 4), random_poly(rng, 2, 3, 3, 4)};
    std::vector<Poly> scaled;
    for (const auto& p : a) scaled.push_back(p * Rational(-5, 3));
    CHECK(brown_order(a, 2, {}).chosen == brown_order(scaled, 2, {}).chosen);
    CHECK(order_by_ndrr(a, 2, {}).chosen == order_by_ndrr(scaled, 2, {}).chosen);
    CHECK(order_by_fulldim(a, 2, {}).chosen == order_by_fulldim(scaled, 2, {}).chosen);
    const auto s = order_by_sotd(a, 2, {}, SotdStrategy::exhaustive);
    const auto t = order_by_sotd(scaled, 2, {}, SotdStrategy::exhaustive);
    CHECK(s.chosen == t.chosen);
    for (std::size_t c = 0; c < s.candidates.size(); ++c) CHECK(s.candidates[c].score == t.candidates[c].score);
  }
}

TEST_CASE("greedy and exhaustive sotd agree on plane corpus problems") {
  for (const auto& entry : std::filesystem::directory_iterator(CADLAB_CORPUS_DIR)) {
    if (!entry.is_regular_file()) continue;
    const Problem p = load_problem(entry.path());
    if (p.nvars() != 2) continue;
    const auto a = p.polynomials();
    CHECK_MESSAGE(order_by_sotd(a, 2, p.blocks, SotdStrategy::exhaustive).chosen ==
                      order_by_sotd(a, 2, p.blocks, SotdStrategy::greedy).chosen,
                  entry.path().string());
  }
}

TEST_CASE("indeterminate counts and Groebner preconditioning") {
  XY v;
  CHECK(tnoi(two_circles()) == 4);
  const std::vector<Poly> gb{v.x - v.c(Rational(1, 2)), v.y * v.y - v.c(Rational(3, 4))};
  CHECK(tnoi(gb) == 2);
  CHECK(tnoi({}) == 0);
  const auto d = gb_precondition_decision(two_circles(), elimination_order(kXY));
  CHECK(d.before == 4);
  CHECK(d.after == 2);
  CHECK(d.use_gb);
  CHECK(d.basis.size() == 2);
  const auto single = gb_precondition_decision(circle(), elimination_order(kXY));
  CHECK(single.before == single.after);
  CHECK_FALSE(single.use_gb);
  const std::vector<Poly> inconsistent{v.x, v.x - v.c(1)};
  const auto bad = gb_precondition_decision(inconsistent, elimination_order(kXY));
  CHECK(bad.after == 0);
  CHECK(bad.use_gb);
  REQUIRE(bad.basis.size() == 1);
  CHECK(bad.basis[0] == v.c(1));
  CHECK(elimination_order(kXY).priority == std::vector<Var>{Var{1}, Var{0}});
}

TEST_CASE("preconditioning decision follows the scores") {
  Rng rng(29);
  for (int i = 0; i < 20; ++i) {
    std::vector<Poly> e{random_poly(rng, 2, 2, 3, 3), random_poly(rng, 2, 2, 3, 3)};
    const auto d = gb_precondition_decision(e, elimination_order(kXY));
    CHECK(d.before == tnoi(e));
    CHECK(d.after == tnoi(d.basis));
    CHECK(d.use_gb == (d.after < d.before));
  }
}

TEST_CASE("feature vectors") {
  const auto f = ml_features(circle(), 2);
  REQUIRE(f.size() == 9);
  CHECK(f[1] == doctest::Approx(1.0 / 3));
  CHECK(f[4] == doctest::Approx(1.0 / 3));
  XY v;
  const std::vector<Poly> only_x{v.x};
  const auto g = ml_features(only_x, 2);
  CHECK(g[1] == 1.0);
  CHECK(g[2] == 1.0);
  CHECK(g[4] == 0.0);
  CHECK(g[5] == 0.0);
  CHECK(ml_features(two_circles(), 2).size() == 9);
  const std::vector<std::string> names{"x", "y", "z"};
  CHECK(ml_feature_names(names).size() == 12);
}

}  // TEST_SUITE
