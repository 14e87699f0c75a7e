#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cadlab/formula.hpp"
#include "cadlab/json_io.hpp"
#include "cadlab/ordering.hpp"
#include "cadlab/random_problems.hpp"
#include "cadlab/smtlib.hpp"
#include "property_suites.hpp"

using namespace cadlab;
using namespace testsupport;

TEST_CASE("univariate cell counts") {
  const auto r = univariate_cell_suite(1001, 200);
  CHECK(r.cases == 200);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("stack invariants") {
  const auto r = stack_invariant_suite(2002, 100);
  CHECK(r.cases >= 90);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("root isolation against Sturm") {
  const auto r = sturm_root_suite(3003, 500);
  CHECK(r.cases == 500);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("Groebner bases") {
  const auto r = groebner_suite(4004, 100);
  CHECK(r.cases == 100);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("generated problems survive both formats") {
  RandomProfile prof;
  prof.npolys = 3;
  for (const auto& p : random_problems(5005, 100, prof)) {
    CHECK_MESSAGE(parse_json(emit_json(p)) == p, p.name);
    CHECK_MESSAGE(parse_smtlib(emit_smtlib(p)) == p, p.name);
  }
}

TEST_CASE("satisfiability is the same under every ordering") {
  for (const auto& p : random_problems(6006, 40, RandomProfile{})) {
    REQUIRE(p.formula);
    std::optional<bool> seen;
    for (const auto& ord : admissible_orderings(p.nvars(), p.blocks)) {
      const auto tree = build_cad(p.polynomials(), ord);
      const bool sat = evaluate_formula_on_cells(tree, *p.formula).true_count > 0;
      if (seen) CHECK_MESSAGE(*seen == sat, p.name);
      seen = sat;
    }
  }
}
