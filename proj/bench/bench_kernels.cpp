// Serial reference vs OpenMP kernels on mu_0^n.

#include <benchmark/benchmark.h>

#include "tpnf/identities.hpp"
#include "tpnf/nullfiliform.hpp"
#include "tpnf/tp_structures.hpp"

namespace {

tpnf::Execution mode_of(const benchmark::State& state) {
  return state.range(1) == 0 ? tpnf::Execution::serial : tpnf::Execution::parallel;
}

tpnf::AlphaParams sample_alpha(int n) {
  tpnf::Vector v;
  for (int t = 2; t <= n; ++t) v.emplace_back(t * t - 3, t + 1);
  return tpnf::AlphaParams(n, v);
}

void BM_CheckAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tpnf::AlgebraPair pair{tpnf::build_mu0(n), tpnf::build_tp_bracket(sample_alpha(n))};
  for (auto _ : state) benchmark::DoNotOptimize(tpnf::check_all(pair, mode_of(state)));
}

void BM_AssembleSystem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tpnf::BilinearMap mu = tpnf::build_mu0(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tpnf::assemble_bracket_system(mu, tpnf::BracketMode::transposed, mode_of(state)));
  }
}

void BM_JacobiConstraints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<tpnf::BilinearMap> basis;
  for (int t = 2; t <= n; ++t) basis.push_back(tpnf::build_tp_bracket(tpnf::AlphaParams::indicator(n, t)));
  for (auto _ : state) benchmark::DoNotOptimize(tpnf::jacobi_constraints(basis, mode_of(state)));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int n : {6, 8, 10})
    for (int parallel : {0, 1}) b->Args({n, parallel});
  b->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_CheckAll)->Apply(sizes);
BENCHMARK(BM_AssembleSystem)->Apply(sizes);
BENCHMARK(BM_JacobiConstraints)->Apply(sizes);

BENCHMARK_MAIN();
