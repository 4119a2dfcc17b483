// Serial vs OpenMP timings for the enumeration kernels. The second range
// argument selects the path: 0 = Serial, 1 = Parallel.

#include <benchmark/benchmark.h>

#include "galois_arrow/arrow.hpp"

using namespace galois_arrow;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

FieldPtr field_of(const benchmark::State& state) {
  return make_field(2, static_cast<std::uint32_t>(state.range(0)));
}

void BM_IncidenceParametrized(benchmark::State& state) {
  const auto f = field_of(state);
  const auto points = enumerate_points(*f);
  std::vector<ProjLine> lines;
  for (const auto& p : points) lines.push_back(ProjLine::make(p[0], p[1], p[2]));
  for (auto _ : state) {
    benchmark::DoNotOptimize(incidence_by_parametrization(*f, lines, exec_of(state)));
  }
}

void BM_IncidenceDotProduct(benchmark::State& state) {
  const auto f = field_of(state);
  const auto points = enumerate_points(*f);
  std::vector<ProjLine> lines;
  for (const auto& p : points) lines.push_back(ProjLine::make(p[0], p[1], p[2]));
  for (auto _ : state) {
    benchmark::DoNotOptimize(incidence_by_dot_product(points, lines, exec_of(state)));
  }
}

void BM_ConicPointSet(benchmark::State& state) {
  const auto f = field_of(state);
  const Plane plane(f);
  const Conic c = canonical_conic(*f);
  for (auto _ : state) benchmark::DoNotOptimize(point_set(c, plane, exec_of(state)));
}

void BM_LineCensus(benchmark::State& state) {
  const auto f = field_of(state);
  const Plane plane(f);
  const PointSet s = point_set(canonical_conic(*f), plane);
  for (auto _ : state) benchmark::DoNotOptimize(line_census(s, exec_of(state)));
}

void BM_ConicArrowScan(benchmark::State& state) {
  const auto f = field_of(state);
  const Plane plane(f);
  const TimePencil tp(plane);
  for (auto _ : state) benchmark::DoNotOptimize(conic_arrow_scan(tp, exec_of(state)));
}

void BM_ArcArrowScan(benchmark::State& state) {
  const auto f = field_of(state);
  const Plane plane(f);
  const TimePencil tp(plane);
  const auto configs = valid_arc_configurations(tp);
  for (auto _ : state) benchmark::DoNotOptimize(arc_arrow_scan(tp, configs, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_IncidenceParametrized)->ArgsProduct({{3, 5, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IncidenceDotProduct)->ArgsProduct({{3, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConicPointSet)->ArgsProduct({{5, 7}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LineCensus)->ArgsProduct({{5, 7}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ConicArrowScan)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArcArrowScan)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
