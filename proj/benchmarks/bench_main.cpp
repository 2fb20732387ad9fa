#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "braidhom/fnf.hpp"
#include "braidhom/hurwitz.hpp"
#include "braidhom/koszul.hpp"
#include "braidhom/linalg.hpp"
#include "braidhom/nichols.hpp"
#include "braidhom/perm_group.hpp"
#include "braidhom/qsa.hpp"

using namespace braidhom;

namespace {

std::shared_ptr<const ConjClassSet> classes(const char* group, const char* sel) {
  return std::make_shared<const ConjClassSet>(select_classes(builtin_group(group), sel));
}

BraidedVectorSpace s3_space(const Field& F) {
  Rack R = conjugation_rack(classes("S3", "transpositions"));
  return braided_space(R, Cocycle::constant(R.size(), Scalar(1)), true, F);
}

void BM_SparseRankModP(benchmark::State& state) {
  Field F = Field::prime(32003);
  std::size_t n = state.range(0);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(1, 100), pick(0, 9);
  SparseMatrix M(n, n, F);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (pick(rng) == 0) M.add_entry(i, j, F.from_int(val(rng)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(M, F));
}
BENCHMARK(BM_SparseRankModP)->Arg(100)->Arg(300);

void BM_BraidHomology(benchmark::State& state) {
  Field F = Field::prime(2);
  auto V = s3_space(F);
  for (auto _ : state) benchmark::DoNotOptimize(braid_homology(V, state.range(0), F));
}
BENCHMARK(BM_BraidHomology)->DenseRange(2, 4);

void BM_ExtTable(benchmark::State& state) {
  Field F = Field::prime(2);
  auto V = s3_space(F);
  for (auto _ : state) benchmark::DoNotOptimize(ext_table(V, state.range(0), F));
}
BENCHMARK(BM_ExtTable)->DenseRange(2, 4);

void BM_NicholsDims(benchmark::State& state) {
  Field Q;
  auto V = s3_space(Q);
  for (auto _ : state) benchmark::DoNotOptimize(nichols_dims(V, 5, Q));
}
BENCHMARK(BM_NicholsDims);

void BM_HurwitzOrbits(benchmark::State& state) {
  auto c = classes("S4", "transpositions");
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_orbits(c, state.range(0)).size());
}
BENCHMARK(BM_HurwitzOrbits)->DenseRange(3, 6);

void BM_KoszulHomology(benchmark::State& state) {
  Field Q;
  auto c = classes("S3", "transpositions");
  for (auto _ : state) benchmark::DoNotOptimize(koszul_homology(koszul_complex_ring(c, 4, 6, Q)));
}
BENCHMARK(BM_KoszulHomology);

}  // namespace

BENCHMARK_MAIN();
