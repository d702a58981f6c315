#include <benchmark/benchmark.h>
#include <braidcover/alexander.hpp>
#include <braidcover/diagram.hpp>
#include <braidcover/foxcalc.hpp>
#include <braidcover/restree.hpp>

using namespace braidcover;

static void BM_Monodromy(benchmark::State& state) {
  BraidWord w = parseBraid("b=7: s1 s2^-1 s3 s4^-1 s5 s6^-1 s1 s2^-1 s3 s4^-1");
  for (auto _ : state) benchmark::DoNotOptimize(monodromy(w));
}
BENCHMARK(BM_Monodromy);

static void BM_Alexander(benchmark::State& state) {
  BraidWord w = parseBraid("b=7: s1 s2^-1 s3 s4^-1 s5 s6^-1 s1 s2^-1 s3 s4^-1");
  IntMatrix a = abelianize(monodromy(w));
  for (auto _ : state) benchmark::DoNotOptimize(alexanderFromMonodromy(a));
}
BENCHMARK(BM_Alexander);

static void BM_RefinedTorsion(benchmark::State& state) {
  BraidWord w = parseBraid("b=5: s1 s2^-1 s3 s4^-1 s1 s2^-1");
  for (auto _ : state) benchmark::DoNotOptimize(refinedTorsion(w));
}
BENCHMARK(BM_RefinedTorsion);

static void BM_WehrliTree(benchmark::State& state) {
  BraidWord w = parseBraid("b=5: s1 s2^-1 s3 s4^-1 s1 s2^-1 s3 s4^-1");
  LinkDiagram d = closureDiagram(w);
  for (auto _ : state) benchmark::DoNotOptimize(wehrliTree(d));
}
BENCHMARK(BM_WehrliTree);

static void BM_LeafCensusNoInvariants(benchmark::State& state) {
  BraidWord w = parseBraid("b=5: s1 s2^-1 s3 s4^-1 s1 s2^-1 s3 s4^-1");
  LinkDiagram d = closureDiagram(w);
  TreeOptions opt;
  opt.leafInvariants = false;
  for (auto _ : state) benchmark::DoNotOptimize(wehrliTree(d, opt));
}
BENCHMARK(BM_LeafCensusNoInvariants);

static void BM_QPrimeCertificate(benchmark::State& state) {
  BraidWord w = parseBraid("b=5: s1 s2^-1 s3 s4^-1 s1 s2^-1");
  LinkDiagram d = closureDiagram(w);
  for (auto _ : state) benchmark::DoNotOptimize(isQuasiAlternatingAnnular(d));
}
BENCHMARK(BM_QPrimeCertificate);

BENCHMARK_MAIN();
