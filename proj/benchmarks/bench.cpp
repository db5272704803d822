#include <benchmark/benchmark.h>

#include "jordan/decompose.hpp"
#include "jordan/hopf.hpp"
#include "jordan/presentation.hpp"

using namespace jordan;

namespace {

void normal_order_product(benchmark::State& state) {
  const auto [abar_p, abar_m] = deformed_boson(Rational(0));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(abar_m.pow(n) * abar_p.pow(n));
}
BENCHMARK(normal_order_product)->DenseRange(1, 4);

void fock_relations(benchmark::State& state) {
  const Realization r = realization("gd-quantum", {{"beta", Rational(-5, 3)}});
  const Presentation& pres = default_catalog().presentation("uzsl2");
  const auto cutoff = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_relations(fock_rep(r, cutoff, 4), pres).passed());
}
BENCHMARK(fock_relations)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void quotient_build(benchmark::State& state) {
  const long beta = -state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(quotient_rep("uzsl2", {{"beta", Rational(beta)}}).dim());
}
BENCHMARK(quotient_build)->Arg(1)->Arg(3)->Arg(6);

void r_matrix_and_qybe(benchmark::State& state) {
  const Representation rep = quotient_rep("uzsl2", {{"beta", Rational(-state.range(0))}});
  const HopfData& h = default_catalog().hopf("uzsl2");
  for (auto _ : state) benchmark::DoNotOptimize(check_qybe(evaluate_R(h, rep, rep).m));
}
BENCHMARK(r_matrix_and_qybe)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void hopf_axioms(benchmark::State& state) {
  const Representation rep = quotient_rep("uzsl2", {{"beta", Rational(-state.range(0))}});
  const HopfData& h = default_catalog().hopf("uzsl2");
  for (auto _ : state) benchmark::DoNotOptimize(check_hopf_axioms(h, rep).passed());
}
BENCHMARK(hopf_axioms)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void decompose_pair(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0)), b = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_product("uzsl2", a, b).components.size());
}
BENCHMARK(decompose_pair)->Args({1, 1})->Args({2, 1})->Args({3, 3})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
