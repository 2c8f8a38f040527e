#include <benchmark/benchmark.h>

#include "gen.hpp"
#include "io.hpp"
#include "kf/canonical.hpp"
#include "kf/qfunction.hpp"
#include "kf/smith.hpp"

using namespace kf;

namespace {

io::ProblemFile load(const std::string& name) {
  return io::parse_problem_file(std::string(KF_FIXTURE_DIR) + "/" + name + ".json");
}

void BM_SmithRandom(benchmark::State& st) {
  gen::Gen g(1);
  size_t n = static_cast<size_t>(st.range(0));
  MatPoly B = g.matpoly(n, n, static_cast<int>(st.range(1)), 0.2);
  for (auto _ : st) benchmark::DoNotOptimize(smith(B));
}
BENCHMARK(BM_SmithRandom)->Args({2, 2})->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_ForneyPair(benchmark::State& st) {
  gen::Gen g(2);
  NevanlinnaPair p = g.pair(static_cast<size_t>(st.range(0)), 2);
  MatPoly P = hcat(p.M, p.N);
  for (auto _ : st) benchmark::DoNotOptimize(forney_indices(P));
}
BENCHMARK(BM_ForneyPair)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DecomposeRoundTrip(benchmark::State& st) {
  gen::Gen g(3);
  std::vector<int> mu{3, 2, 1};
  MatPoly B = g.unimodular(3, 1, 4) * canonical_basis(mu) * MatPoly::constant(g.invertible(6));
  for (auto _ : st) benchmark::DoNotOptimize(decompose(B));
}
BENCHMARK(BM_DecomposeRoundTrip)->Unit(benchmark::kMillisecond);

void BM_AnalyzeExample64(benchmark::State& st) {
  PontryaginSpace s = load("example64").space();
  for (auto _ : st) benchmark::DoNotOptimize(analyze(s));
}
BENCHMARK(BM_AnalyzeExample64)->Unit(benchmark::kMillisecond);

void BM_SynthesizeExample64(benchmark::State& st) {
  PontryaginSpace s = load("example64").space();
  for (auto _ : st) benchmark::DoNotOptimize(synthesize(s));
}
BENCHMARK(BM_SynthesizeExample64)->Unit(benchmark::kMillisecond);

void BM_PairFromQExample64(benchmark::State& st) {
  PontryaginSpace s = load("example64").space();
  LinearRelation A = load("example64-A").relation();
  CMat g = load("example64-gamma").matpoly().coeff(0);
  CanonicalDecomposition dec = decompose(s);
  for (auto _ : st) benchmark::DoNotOptimize(pair_from_q(s, dec, A, GaussianRational::i(), g, CMat(3, 3)));
}
BENCHMARK(BM_PairFromQExample64)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
