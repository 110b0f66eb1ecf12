#include <benchmark/benchmark.h>

#include "superrtt/builtins.hpp"
#include "superrtt/calculus.hpp"
#include "superrtt/contraction.hpp"
#include "superrtt/hopf.hpp"
#include "superrtt/parser.hpp"
#include "superrtt/rmatrix.hpp"

using namespace superrtt;

static void BM_PolyGcd(benchmark::State& state) {
  const Poly p = Poly::variable(Var::p);
  const Poly q = Poly::variable(Var::q);
  const Poly a = (p - 1) * (q + 2) * (p * q - 1) * (p + q);
  const Poly b = (p - 1) * (p * q - 1) * (q - 3) * (p * p + 1);
  for (auto _ : state) benchmark::DoNotOptimize(Poly::gcd(a, b));
}
BENCHMARK(BM_PolyGcd);

// Normal form of (a + beta + gamma + d)^n in GL_h1h2 with a fresh cache.
static void BM_NormalFormPower(benchmark::State& state) {
  const Presentation& p = builtin_presentation("GL_h1h2");
  const Element s = parse_element("a + beta + gamma + d", p.alphabet());
  const Element e = power(s, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Reducer r(p);
    benchmark::DoNotOptimize(r.reduce(e));
  }
}
BENCHMARK(BM_NormalFormPower)->DenseRange(2, 5);

static void BM_RttResidual(benchmark::State& state) {
  const Presentation& p = builtin_presentation("GL_h1h2");
  const GradedMatrix t = generator_matrix(p);
  const GradedMatrix r = r_h1h2();
  for (auto _ : state) benchmark::DoNotOptimize(rtt_residual(r, t, p));
}
BENCHMARK(BM_RttResidual);

static void BM_GradedYbe(benchmark::State& state) {
  const GradedMatrix r = r_h1();
  for (auto _ : state) benchmark::DoNotOptimize(ybe_residual(r, true));
}
BENCHMARK(BM_GradedYbe);

static void BM_ContractRMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(contract_rmatrix());
}
BENCHMARK(BM_ContractRMatrix);

static void BM_ContractSupergroup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(contract_supergroup());
}
BENCHMARK(BM_ContractSupergroup)->Unit(benchmark::kMillisecond);

static void BM_IdealsEqual(benchmark::State& state) {
  const Presentation& a = builtin_presentation("GL_h1h2");
  const Presentation& b = builtin_presentation("GL_h1h2_short");
  for (auto _ : state) benchmark::DoNotOptimize(ideals_equal(a, b, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_IdealsEqual)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Coassociativity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coassociativity());
}
BENCHMARK(BM_Coassociativity)->Unit(benchmark::kMillisecond);

static void BM_CalculusExpand(benchmark::State& state) {
  for (auto _ : state) {
    for (Family f : kAllFamilies) benchmark::DoNotOptimize(expand_index_equation(f));
  }
}
BENCHMARK(BM_CalculusExpand);

BENCHMARK_MAIN();
