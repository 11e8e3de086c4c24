// Serial reference kernels against their OpenMP versions on the default session (A_2, q = 2).
#include <benchmark/benchmark.h>

#include "dhall/kernels.hpp"

using namespace dhall;

namespace {

const Session& session() {
  static Session s(Quiver::linear(2), 2);
  return s;
}

Mult mult(int a, int b) { return Mult{a, b}; }

// C_{S_1 + S_1} + K_{P_2}, a middle term with many subcomplexes
Complex big_complex() {
  const Session& s = session();
  RepKey a = s.key(semisimple_rep(s.quiver(), {2, 0}, 2));
  return complex_from_key(s, {a, s.zero_key(), mult(0, 1), mult(0, 0)});
}

void BM_extension_serial(benchmark::State& st) {
  const Session& s = session();
  Complex m = big_complex(), n = complex_from_key(s, {s.simple(1), s.simple(0), mult(0, 0), mult(1, 0)});
  for (auto _ : st) benchmark::DoNotOptimize(extension_sweep_serial(s, m, n));
}
void BM_extension_parallel(benchmark::State& st) {
  const Session& s = session();
  Complex m = big_complex(), n = complex_from_key(s, {s.simple(1), s.simple(0), mult(0, 0), mult(1, 0)});
  for (auto _ : st) benchmark::DoNotOptimize(extension_sweep_parallel(s, m, n));
}

void BM_subobject_serial(benchmark::State& st) {
  Complex l = big_complex();
  for (auto _ : st) benchmark::DoNotOptimize(subobject_sweep_serial(session(), l));
}
void BM_subobject_parallel(benchmark::State& st) {
  Complex l = big_complex();
  for (auto _ : st) benchmark::DoNotOptimize(subobject_sweep_parallel(session(), l));
}

Rep big_rep() {
  const Session& s = session();
  return direct_sum(s.rep(s.projective(0)), semisimple_rep(s.quiver(), {2, 2}, 2));
}
void BM_subrep_serial(benchmark::State& st) {
  Rep l = big_rep();
  for (auto _ : st) benchmark::DoNotOptimize(subrep_sweep_serial(session(), l));
}
void BM_subrep_parallel(benchmark::State& st) {
  Rep l = big_rep();
  for (auto _ : st) benchmark::DoNotOptimize(subrep_sweep_parallel(session(), l));
}

}  // namespace

BENCHMARK(BM_extension_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extension_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_subobject_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_subobject_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_subrep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_subrep_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
