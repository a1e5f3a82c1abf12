#include <benchmark/benchmark.h>

#include "deltacompat/expression.hpp"
#include "deltacompat/polyalg.hpp"
#include "deltacompat/reduce.hpp"
#include "deltacompat/structure.hpp"

using namespace deltacompat;

namespace {

ContextPtr ctx() {
  static const auto c = VarContext::make({"t"}, {"x"}, {"y"}, {"q"});
  return c;
}

CertificateSystem example() {
  const auto c = ctx();
  return {c,
          {parse_expression("((4*t+2*x+y^2)*(t+1) + (t+x+1)*(t+x)*(2*t+y^2))/((t+1)*(t+x)*(2*t+y^2))", c)},
          {parse_expression("2*(2*x+3)*(x+1)*(t+1)*(t+x+1)*(5*x+y)/((5*x+y+5)*(t+x))", c)},
          {parse_expression("(5*x+y)*(2*t+q^2*y^2)*(1+q*y)/((5*x+q*y)*(2*t+y^2))", c)}};
}

}  // namespace

static void BM_Gcd(benchmark::State& state) {
  const auto c = ctx();
  const auto a = parse_expression("(t+x*y+q)^3*(x^2-t*y+5)^2", c).num();
  const auto b = parse_expression("(t+x*y+q)^2*(y^2+q*t-x)^3", c).num();
  for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_Gcd);

static void BM_Dispersion(benchmark::State& state) {
  const auto c = ctx();
  const auto a = parse_expression("(x+t)*(x^2+y*x+3)*(2*x-q)", c).num();
  const auto b = parse_expression("(x+t-17)*(x^2+(y-8)*x+19-4*y)*(2*x+5)", c).num();
  for (auto _ : state) benchmark::DoNotOptimize(dispersion(a, b, OpRef::sigma(0)));
}
BENCHMARK(BM_Dispersion);

static void BM_Check(benchmark::State& state) {
  const auto sys = example();
  for (auto _ : state) benchmark::DoNotOptimize(check(sys));
}
BENCHMARK(BM_Check);

static void BM_Represent(benchmark::State& state) {
  const auto sys = example();
  for (auto _ : state) benchmark::DoNotOptimize(standardize(represent(sys)));
}
BENCHMARK(BM_Represent)->Unit(benchmark::kMillisecond);

static void BM_Dependence(benchmark::State& state) {
  const auto c = VarContext::make({"t"}, {"x"}, {}, {});
  const std::vector<CertificateSystem> systems{
      {c, {parse_expression("x/(t+1)", c)}, {parse_expression("(x+1)*(t+1)", c)}, {}},
      {c, {parse_expression("2*x/(t+1)+1/t", c)}, {parse_expression("(x+1)^2*(t+1)^2", c)}, {}}};
  for (auto _ : state) benchmark::DoNotOptimize(algebraic_dependence(systems));
}
BENCHMARK(BM_Dependence)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
