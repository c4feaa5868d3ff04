#include <benchmark/benchmark.h>

#include "imhom/corpus.hpp"
#include "imhom/homology.hpp"
#include "imhom/imcore.hpp"

using namespace imh;

namespace {

void BM_ColumnReduce(benchmark::State& state) {
  ComplexPtr k = build_corpus("grid_torus").complex;
  SubdivisionResult sd = barycentric_subdivision(k);
  QMatrix m = boundary_matrix(*sd.complex, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(m));
  }
}
BENCHMARK(BM_ColumnReduce);

void BM_HomologyRanks(benchmark::State& state) {
  ComplexPtr k = build_corpus("susp_torus").complex;
  for (auto _ : state) {
    benchmark::DoNotOptimize(homology_ranks(k));
  }
}
BENCHMARK(BM_HomologyRanks);

void BM_CanonicalStratification(benchmark::State& state) {
  ComplexPtr k = build_corpus("susp_torus").complex;
  for (auto _ : state) {
    Stratification s = canonical_stratification(k);
    benchmark::DoNotOptimize(s.codims());
  }
}
BENCHMARK(BM_CanonicalStratification);

void BM_IntersectionHomology(benchmark::State& state) {
  ComplexPtr k = build_corpus("susp_torus").complex;
  Stratification s = canonical_stratification(k);
  Perversity m = Perversity::middle(k->dim());
  for (auto _ : state) {
    benchmark::DoNotOptimize(ih_ranks(s, m));
  }
}
BENCHMARK(BM_IntersectionHomology);

void BM_ImageKernelTables(benchmark::State& state) {
  ComplexPtr k = build_corpus("glued_spheres").complex;
  for (auto _ : state) {
    ImAnalysis an(k);
    benchmark::DoNotOptimize(an.im_ranks());
    benchmark::DoNotOptimize(an.ker_ranks());
  }
}
BENCHMARK(BM_ImageKernelTables);

void BM_BarycentricSubdivision(benchmark::State& state) {
  ComplexPtr k = build_corpus("grid_torus").complex;
  for (auto _ : state) {
    benchmark::DoNotOptimize(barycentric_subdivision(k).complex->total_simplices());
  }
}
BENCHMARK(BM_BarycentricSubdivision);

}  // namespace

BENCHMARK_MAIN();
