// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "cubic27/lines27.hpp"
#include "cubic27/sweep.hpp"

using namespace cubic27;

namespace {

const std::vector<Subgroup> &family() {
  static const std::vector<Subgroup> groups = [] {
    SweepConfig c;
    c.seed = 42;
    c.random_count = 200;
    return build_family(c).groups;
  }();
  return groups;
}

int workers() { return omp_get_max_threads(); }

void BM_SixthLineSerial(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(sixth_line_verify(line_table()));
}

void BM_SixthLineParallel(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(sixth_line_verify_parallel(line_table()));
}

void BM_QuotientReportsSerial(benchmark::State &state) {
  const auto &groups = family();
  for (auto _ : state) benchmark::DoNotOptimize(quotient_reports_serial(groups));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(groups.size()));
}

void BM_QuotientReportsParallel(benchmark::State &state) {
  const auto &groups = family();
  for (auto _ : state) benchmark::DoNotOptimize(quotient_reports_parallel(groups, workers()));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(groups.size()));
}

void BM_LineChecksSerial(benchmark::State &state) {
  const auto &groups = family();
  for (auto _ : state) benchmark::DoNotOptimize(line_checks_serial(groups));
}

void BM_LineChecksParallel(benchmark::State &state) {
  const auto &groups = family();
  for (auto _ : state) benchmark::DoNotOptimize(line_checks_parallel(groups, workers()));
}

} // namespace

BENCHMARK(BM_SixthLineSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SixthLineParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuotientReportsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuotientReportsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LineChecksSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LineChecksParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
