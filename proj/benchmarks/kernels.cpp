#include <benchmark/benchmark.h>

#include "cadlab/cad.hpp"
#include "cadlab/groebner.hpp"
#include "cadlab/heuristics.hpp"
#include "cadlab/polyarith.hpp"
#include "cadlab/random_problems.hpp"
#include "cadlab/realroots.hpp"

using namespace cadlab;

namespace {

Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, Var{i}); }
Poly num(std::size_t n, long c) { return Poly::constant(n, Rational(c)); }

std::vector<Poly> two_circles() {
  const Poly x = var(2, 0), y = var(2, 1);
  return {x * x + y * y - num(2, 1), x * x - x * Rational(2) + y * y};
}

void BM_Resultant(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const Poly x = var(2, 0), y = var(2, 1);
  const Poly p = y.pow(d) + x * y - num(2, 3), q = y.pow(d) * x - y + x.pow(2);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(p, q, Var{1}));
}
BENCHMARK(BM_Resultant)->DenseRange(2, 6, 2);

void BM_IsolateRoots(benchmark::State& state) {
  // Wilkinson-style product with distinct integer roots
  Poly p = num(1, 1);
  for (long i = 1; i <= state.range(0); ++i) p = p * (var(1, 0) - num(1, i));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_IsolateRoots)->Arg(5)->Arg(10)->Arg(20);

void BM_TwoCirclesCad(benchmark::State& state) {
  const auto polys = two_circles();
  for (auto _ : state) benchmark::DoNotOptimize(build_cad(polys, VarOrdering::identity(2)).total());
}
BENCHMARK(BM_TwoCirclesCad);

void BM_Buchberger(benchmark::State& state) {
  const auto polys = two_circles();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(polys, MonomialOrder::lex()));
}
BENCHMARK(BM_Buchberger);

void BM_SotdExhaustive(benchmark::State& state) {
  RandomProfile profile;
  profile.nvars = static_cast<std::size_t>(state.range(0));
  const auto problems = random_problems(7, 1, profile);
  const auto polys = problems[0].polynomials();
  for (auto _ : state)
    benchmark::DoNotOptimize(order_by_sotd(polys, profile.nvars, {}, SotdStrategy::exhaustive).chosen);
}
BENCHMARK(BM_SotdExhaustive)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
