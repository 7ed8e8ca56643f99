#include <benchmark/benchmark.h>

#include "padic/divrel.hpp"
#include "padic/funcring.hpp"
#include "padic/hensel.hpp"
#include "padic/padic.hpp"
#include "padic/sampler.hpp"

namespace {

using namespace padic;

void BM_Mul(benchmark::State& state) {
  const std::int64_t prec = state.range(0);
  QpSampler sampler(3, prec, 1);
  const PAdic a = sampler.draw_nonzero();
  const PAdic b = sampler.draw_nonzero();
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_Mul)->Arg(64)->Arg(256)->Arg(1024);

void BM_Div(benchmark::State& state) {
  const std::int64_t prec = state.range(0);
  QpSampler sampler(3, prec, 2);
  const PAdic a = sampler.draw_nonzero();
  const PAdic b = sampler.draw_nonzero();
  for (auto _ : state) {
    benchmark::DoNotOptimize(a / b);
  }
}
BENCHMARK(BM_Div)->Arg(64)->Arg(256);

void BM_KochenGamma(benchmark::State& state) {
  QpSampler sampler(5, 64, 3);
  const PAdic x = sampler.draw_nonzero();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kochen_gamma(x));
  }
}
BENCHMARK(BM_KochenGamma);

void BM_QthRoot(benchmark::State& state) {
  const std::int64_t prec = state.range(0);
  const PAdic target = PAdic::one(3, prec) + PAdic::p_power(3, 1, prec) *
                                                 embed_rational(Rational(7, 5), 3, prec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qth_root_of_unit(RootSpec{2, target, prec}));
  }
}
BENCHMARK(BM_QthRoot)->Arg(64)->Arg(256);

void BM_DividesStar(benchmark::State& state) {
  const CompactSpace space = CompactSpace::zp_level(3, 2);
  FnSampler sampler(space, 3, 64, 4);
  const LCFunction f = sampler.draw();
  const LCFunction g = sampler.draw();
  for (auto _ : state) {
    benchmark::DoNotOptimize(divides_star(f, g));
  }
}
BENCHMARK(BM_DividesStar);

void BM_RootCriterion(benchmark::State& state) {
  const CompactSpace space = CompactSpace::finite(8);
  FnSampler sampler(space, 3, 64, 5);
  const LCFunction f = sampler.draw_integral();
  for (auto _ : state) {
    benchmark::DoNotOptimize(divides_by_root_criterion(
        LCFunction::constant(space, PAdic::one(3ll, 64)), f, 2));
  }
}
BENCHMARK(BM_RootCriterion);

}  // namespace

BENCHMARK_MAIN();
