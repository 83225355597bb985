#include <benchmark/benchmark.h>

#include <vector>

#include "polar/factor.hpp"
#include "polar/groebner.hpp"
#include "polar/pipeline.hpp"
#include "polar/realroots.hpp"
#include "polar/slp.hpp"
#include "polar/sturm.hpp"

using namespace polar;

namespace {

MultiPoly parse(const char* text, std::vector<std::string> vars) {
  return parse_poly(text, vars).poly;
}

UniPoly wilkinson(int n) {
  UniPoly p = UniPoly::constant(1);
  for (int k = 1; k <= n; ++k) p *= UniPoly(std::vector<Rational>{Rational(-k), Rational(1)});
  return p;
}

}  // namespace

static void BM_BuchbergerCyclic3(benchmark::State& state) {
  std::vector<std::string> v{"x", "y", "z"};
  std::vector<MultiPoly> gens{parse("x + y + z", v), parse("x*y + y*z + z*x", v),
                              parse("x*y*z - 1", v)};
  for (auto _ : state) benchmark::DoNotOptimize(gb::buchberger(gens, gb::Order::GrevLex));
}
BENCHMARK(BM_BuchbergerCyclic3);

static void BM_FactorSwinnertonDyer(benchmark::State& state) {
  UniPoly p(std::vector<Rational>{Rational(1), Rational(0), Rational(-10), Rational(0), Rational(1)});
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_Q(p));
}
BENCHMARK(BM_FactorSwinnertonDyer);

static void BM_FactorWilkinson(benchmark::State& state) {
  UniPoly p = wilkinson(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_Q(p));
}
BENCHMARK(BM_FactorWilkinson)->Arg(6)->Arg(10)->Arg(14);

static void BM_IsolateWilkinson(benchmark::State& state) {
  UniPoly p = wilkinson(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_IsolateWilkinson)->Arg(8)->Arg(16);

static void BM_Gradient(benchmark::State& state) {
  std::vector<std::string> v{"x", "y", "z"};
  Slp f = parse_poly("(x^2 + y^2 + z^2 + 3)^2 - 16*(x^2 + y^2)", v).slp;
  for (auto _ : state) benchmark::DoNotOptimize(gradient_slp(f));
}
BENCHMARK(BM_Gradient);

static void BM_Solve(benchmark::State& state, const char* text) {
  SolveInput in = input_from_text(text);
  for (auto _ : state) benchmark::DoNotOptimize(solve(in));
}
BENCHMARK_CAPTURE(BM_Solve, circle, "x^2 + y^2 - 1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, two_circles, "((x-2)^2 + y^2 - 1)*((x+2)^2 + y^2 - 1)")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, sphere, "x^2 + y^2 + z^2 - 1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, torus, "(x^2 + y^2 + z^2 + 3)^2 - 16*(x^2 + y^2)")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
