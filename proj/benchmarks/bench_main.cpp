#include <benchmark/benchmark.h>

#include <random>

#include "bvs/apps.hpp"

using namespace bvs;

namespace {

// dense random pair, coefficients in [-10, 10], every monomial of degree <= d in each variable
BivPoly dense(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> c(-10, 10);
  std::map<BivPoly::Exponent, Integer> t;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) t[{i, j}] = c(rng);
  t[{0, d}] = 1;
  return BivPoly(std::move(t));
}

const char* systems[][2] = {
    {"x^2 + y^2 - 2", "x - y"},
    {"x^2 + 4*y^2 - 4", "4*x^2 + y^2 - 4"},
    {"x^4 + y^4 - 1", "4*x^2 + 4*y^2 - 5"},
    {"y^4 - x^4 + x*y - 1", "x^4 + y^4 - 3"},
    {"x^4 - 3*x^2*y + y^3 + 2*x*y - x - 1", "y^4 + x^3 - 2*x*y^2 + y - 2"},
};

void BM_Resultant(benchmark::State& st) {
  std::mt19937 rng(7);
  BivPoly f = dense(rng, static_cast<int>(st.range(0))), g = dense(rng, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(resultant(f, g, Var::y));
}
BENCHMARK(BM_Resultant)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Isolate(benchmark::State& st) {
  // Wilkinson-like product (x - 1)(x - 2)...(x - n)
  UniPoly f = UniPoly::one();
  for (int i = 1; i <= st.range(0); ++i) f = f * linear_through(Rational(i));
  f = f + UniPoly::one();
  for (auto _ : st) benchmark::DoNotOptimize(isolate(f));
}
BENCHMARK(BM_Isolate)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

template <Solver S>
void BM_Solve(benchmark::State& st) {
  BivPoly F = parse_poly(systems[st.range(0)][0]), G = parse_poly(systems[st.range(0)][1]);
  FilterConfig cfg;
  cfg.enabled = st.range(1) != 0;
  for (auto _ : st) {
    try {
      benchmark::DoNotOptimize(solve(S, F, G, cfg));
    } catch (const GenericityError&) {
      st.SkipWithError("not in generic position");
      break;
    }
  }
}
BENCHMARK_TEMPLATE(BM_Solve, Solver::grid)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Solve, Solver::mrur)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Solve, Solver::grur)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Topology(benchmark::State& st) {
  const char* curves[] = {"x^2 + y^2 - 1", "y^2 - x^3 - x^2"};
  BivPoly F = parse_poly(curves[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(curve_topology(F));
}
BENCHMARK(BM_Topology)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
