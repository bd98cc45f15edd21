#include <benchmark/benchmark.h>

#include "agcodes/codes.hpp"
#include "agcodes/construct.hpp"
#include "agcodes/curves.hpp"
#include "agcodes/semigroup.hpp"
#include "agcodes/tables.hpp"

using namespace agcodes;

namespace {

void BM_SemigroupConstruct(benchmark::State& state) {
  for (auto _ : state) {
    NumericalSemigroup s({10, 13, 16, 17});
    benchmark::DoNotOptimize(s.genus());
  }
}
BENCHMARK(BM_SemigroupConstruct);

void BM_FengRaoR(benchmark::State& state) {
  const NumericalSemigroup s({4, 17});
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.r(state.range(0)));
  }
}
BENCHMARK(BM_FengRaoR)->Arg(10)->Arg(30)->Arg(60);

void BM_ReferenceTableCsv(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(render_reference_table(49, TableFormat::Csv, false));
  }
}
BENCHMARK(BM_ReferenceTableCsv);

void BM_EnumeratePoints(benchmark::State& state) {
  const CurveInstance inst = make_instance("C3");  // 1024 points over GF(256)
  const PlaneModel model = build_model(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_points(model).size());
  }
}
BENCHMARK(BM_EnumeratePoints);

void BM_CheckMatrixRank(benchmark::State& state) {
  const CurveInstance inst = make_instance("D2");
  const PlaneModel model = build_model(inst);
  const EvaluationSet pts = enumerate_points(model);
  const CheckMatrix m = build_check_matrix(model, pts, model.semigroup,
                                           state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gf_rank(model.field, m.rows));
  }
}
BENCHMARK(BM_CheckMatrixRank)->Arg(9)->Arg(30)->Arg(53);

void BM_MinDistance(benchmark::State& state) {
  const CurveInstance inst = make_instance("H:q0=3");
  const PlaneModel model = build_model(inst);
  const EvaluationSet pts = enumerate_points(model);
  const CheckMatrix m = build_check_matrix(model, pts, model.semigroup,
                                           state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_distance_exhaustive(model.field, m));
  }
}
BENCHMARK(BM_MinDistance)->Arg(20)->Arg(22);

}  // namespace

BENCHMARK_MAIN();
