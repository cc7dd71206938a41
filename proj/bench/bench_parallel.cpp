// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "heckefuse/actions.hpp"
#include "heckefuse/catalog.hpp"
#include "heckefuse/elementary.hpp"
#include "heckefuse/ext_hecke.hpp"
#include "heckefuse/table.hpp"

using namespace heckefuse;

namespace {

const char* kPairs[] = {"S3_in_S4", "D4_in_S4", "Heis3"};

FinitePair load(int i) { return load_finite_pair(find_entry(bundled_catalog(), kPairs[i])); }

void ext_table_bench(benchmark::State& state, Schedule schedule) {
  const FinitePair fp = load(static_cast<int>(state.range(0)));
  const ExtHeckePair pair(fp.system);
  for (auto _ : state) benchmark::DoNotOptimize(ext_table(pair, fp.entry.name, 0, schedule));
  state.SetLabel(fp.entry.name);
}

void elementary_table_bench(benchmark::State& state, Schedule schedule) {
  const FinitePair fp = load(static_cast<int>(state.range(0)));
  const ElementaryCalculus calc(fp.system, fp.omega);
  for (auto _ : state) benchmark::DoNotOptimize(elementary_table(calc, fp.entry.name, "bench", 0, schedule));
  state.SetLabel(fp.entry.name);
}

void BM_ExtTableSerial(benchmark::State& s) { ext_table_bench(s, Schedule::Serial); }
void BM_ExtTableParallel(benchmark::State& s) { ext_table_bench(s, Schedule::Parallel); }
void BM_ElementaryTableSerial(benchmark::State& s) { elementary_table_bench(s, Schedule::Serial); }
void BM_ElementaryTableParallel(benchmark::State& s) { elementary_table_bench(s, Schedule::Parallel); }

GroupPtr normalizer_input(std::int64_t degree) {
  // a cyclic group acting regularly on `degree` points
  std::vector<Point> images(static_cast<std::size_t>(degree));
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<Point>((i + 1) % images.size());
  return FiniteGroup::closure(images.size(), {Perm(images)});
}

void BM_NormalizerSerial(benchmark::State& state) {
  const GroupPtr g = normalizer_input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normalizer_in_sym_serial(*g));
}

void BM_NormalizerParallel(benchmark::State& state) {
  const GroupPtr g = normalizer_input(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normalizer_in_sym(*g));
}

}  // namespace

BENCHMARK(BM_ExtTableSerial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtTableParallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ElementaryTableSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ElementaryTableParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalizerSerial)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalizerParallel)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
