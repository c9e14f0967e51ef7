#include <benchmark/benchmark.h>

#include "hzeta/identities.hpp"
#include "hzeta/integrals.hpp"
#include "hzeta/oracles.hpp"

using namespace hzeta;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_IntegralI(benchmark::State& state) {
    const PrecisionCtx ctx(30);
    for (auto _ : state) benchmark::DoNotOptimize(integral_i_all(10, 2, ctx, exec_of(state)));
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_IntegralI)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LimitOracle(benchmark::State& state) {
    const PrecisionCtx ctx(20);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_A_limit(2, 1, 1000000, ctx, exec_of(state)));
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_LimitOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
    const PrecisionCtx ctx(30);
    // fills the coefficient engine so both variants time the same work
    identity_suite(ctx, Exec::serial);
    for (auto _ : state) benchmark::DoNotOptimize(identity_suite(ctx, exec_of(state)));
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_IdentitySuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
