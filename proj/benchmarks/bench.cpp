#include <benchmark/benchmark.h>

#include "pncalc/fixtures.hpp"
#include "pncalc/parser.hpp"
#include "pncalc/random.hpp"
#include "pncalc/report.hpp"

namespace {

using namespace pncalc;

void BM_PolynomialGcd(benchmark::State& state) {
  const Chart chart({"x", "y", "z"});
  const Polynomial a = parse_expr("(x + y*z - 2)^3 * (x^2 - y + 1/2)", chart).numerator();
  const Polynomial b = parse_expr("(x + y*z - 2)^2 * (z^3 - x*y)", chart).numerator();
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolynomialGcd);

void BM_RationalArithmetic(benchmark::State& state) {
  const Chart chart({"x", "y"});
  const RatFunc f = parse_expr("(x^2 + y)/(x - y + 1)", chart);
  const RatFunc g = parse_expr("(x*y - 3)/(x^2 + 1)", chart);
  for (auto _ : state) benchmark::DoNotOptimize(f * g + f / g);
}
BENCHMARK(BM_RationalArithmetic);

void BM_SchoutenSquare(benchmark::State& state) {
  const Chart chart({"a", "b", "c", "d"});
  Rng rng(1);
  const Multivector p = random_multivector(rng, chart, 2);
  for (auto _ : state) benchmark::DoNotOptimize(schouten(p, p));
}
BENCHMARK(BM_SchoutenSquare);

void BM_Concomitant(benchmark::State& state) {
  const Structure s = materialize(load_fixture("FIX-B").structure);
  for (auto _ : state) benchmark::DoNotOptimize(concomitant_coord(s.p, s.n));
}
BENCHMARK(BM_Concomitant);

void BM_FullRun(benchmark::State& state) {
  const StructureDef def = load_fixture("FIX-B").structure;
  for (auto _ : state) benchmark::DoNotOptimize(run_checks(def, RunOptions{}));
}
BENCHMARK(BM_FullRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
