// Serial reference versus OpenMP kernels.
#include <benchmark/benchmark.h>

#include <memory>

#include "msv/audit.hpp"
#include "msv/components.hpp"

using namespace msv;

namespace {

AuditScope scope() {
  AuditScope s;
  for (int r = 2; r <= 5; ++r) s.add_type(Family::A, r);
  s.add_type(Family::D, 5);
  s.max_degree = 3;
  s.budget = 100'000'000;
  return s;
}

void BM_AuditSerial(benchmark::State& st) {
  const AuditScope s = scope();
  const Suite suite = static_cast<Suite>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(run_suite_serial(s, suite).checks);
  st.SetLabel(suite_name(suite));
}

void BM_AuditParallel(benchmark::State& st) {
  const AuditScope s = scope();
  const Suite suite = static_cast<Suite>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(run_suite(s, suite).checks);
  st.SetLabel(suite_name(suite));
}

BottSamelsonData big_grassmannian() {
  // Gr(4,8) itself.
  const GrassmannianWord g = partition_to_word(Partition::make({}, 4, 4));
  return BottSamelsonData::build(std::make_shared<const RootSystem>(RootSystem::build(Family::A, g.rank)),
                                 g.weight_index, g.word);
}

BottSamelsonData many_holes() {
  const GrassmannianWord g = partition_to_word(Partition::make({4, 3, 2, 1}, 5, 5));
  return BottSamelsonData::build(std::make_shared<const RootSystem>(RootSystem::build(Family::A, g.rank)),
                                 g.weight_index, g.word);
}

void BM_NeSetSerial(benchmark::State& st) {
  const BottSamelsonData bs = many_holes();
  for (auto _ : st) benchmark::DoNotOptimize(ne_set_serial(bs, st.range(0)).count());
}

void BM_NeSetParallel(benchmark::State& st) {
  const BottSamelsonData bs = many_holes();
  for (auto _ : st) benchmark::DoNotOptimize(ne_set(bs, st.range(0)).count());
}

void BM_NeSetFullGrassmannian(benchmark::State& st) {
  const BottSamelsonData bs = big_grassmannian();
  for (auto _ : st) benchmark::DoNotOptimize(ne_set(bs, st.range(0)).count());
}

}  // namespace

BENCHMARK(BM_AuditSerial)->Arg(static_cast<int>(Suite::Pgqmoins1))->Arg(static_cast<int>(Suite::Swap))
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditParallel)->Arg(static_cast<int>(Suite::Pgqmoins1))->Arg(static_cast<int>(Suite::Swap))
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NeSetSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NeSetParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NeSetFullGrassmannian)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
